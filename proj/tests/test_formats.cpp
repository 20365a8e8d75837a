// Copyright 2026 the sss authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <sstream>

#include "sss/access_structure.hpp"
#include "sss/errors.hpp"
#include "sss/rational.hpp"
#include "sss/table.hpp"

using namespace sss;

TEST_CASE("rational parsing accepts integers, fractions, and decimals") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-3") == Rat(-3));
    CHECK(parse_rational("3/6") == Rat(1, 2));
    CHECK(parse_rational("-0.25") == Rat(-1, 4));
    CHECK(parse_rational("2.5") == Rat(5, 2));
    CHECK(parse_rational(".5") == Rat(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("a"), FormatError);
    CHECK_THROWS_AS(parse_rational("1e3"), FormatError);
    CHECK(format_rational(Rat(1, 2)) == "1/2");
    CHECK(format_rational(Rat(3)) == "3/1");
}

TEST_CASE("random structure families survive a text round trip") {
    std::mt19937 rng(404);
    for (int round = 0; round < 30; ++round) {
        Family family;
        const int n = static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) {
            std::vector<ParticipantId> ids;
            const int k = 1 + static_cast<int>(rng() % 4);
            for (int j = 0; j < k; ++j) ids.push_back(static_cast<int>(rng() % 9));
            family.push_back(make_set(std::move(ids)));
        }
        std::ostringstream out;
        write_structure(out, family);
        std::istringstream in(out.str());
        CHECK(read_structure(in) == family);
    }
}

TEST_CASE("table round trip preserves exact masses") {
    JointDistributionTable table;
    table.participants = {2, 5};
    table.share_domains = {{0, 1}, {0, 1, 2}};
    table.secret_domain = {7, 9};
    table.mass.emplace_back(std::vector<int>{0, 2, 7}, Rat(1, 3));
    table.mass.emplace_back(std::vector<int>{1, 0, 9}, Rat(1, 6));
    table.mass.emplace_back(std::vector<int>{1, 1, 7}, Rat(1, 2));
    table.canonicalize();
    table.validate();

    std::ostringstream out;
    write_table(out, table);
    std::istringstream in(out.str());
    const JointDistributionTable loaded = read_table(in);
    CHECK(loaded.participants == table.participants);
    CHECK(loaded.share_domains == table.share_domains);
    CHECK(loaded.secret_domain == table.secret_domain);
    CHECK(loaded.mass == table.mass);
}

TEST_CASE("table validation failures") {
    std::istringstream not_one(
        "table v1\nparticipants 1\nsecretdomain 0 1\ndomain 1 0\np 0 0 1/3\n");
    CHECK_THROWS_AS(read_table(not_one), Error);

    std::istringstream tiny_secret(
        "table v1\nparticipants 1\nsecretdomain 0\ndomain 1 0\np 0 0 1/1\n");
    CHECK_THROWS_AS(read_table(tiny_secret), Error);

    std::istringstream outside(
        "table v1\nparticipants 1\nsecretdomain 0 1\ndomain 1 0\np 3 0 1/1\n");
    CHECK_THROWS_AS(read_table(outside), Error);
}

TEST_CASE("duplicate atoms merge on canonicalization") {
    std::istringstream in(
        "table v1\nparticipants 1\nsecretdomain 0 1\ndomain 1 0 1\n"
        "p 0 0 1/4\np 0 0 1/4\np 1 1 1/2\n");
    const JointDistributionTable table = read_table(in);
    REQUIRE(table.mass.size() == 2);
    CHECK(table.mass[0].second == Rat(1, 2));
}
