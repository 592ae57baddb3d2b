/* Copyright 2026 The ASC Analyzer Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "ascan/conllu.hpp"
#include "ascan/error.hpp"
#include "ascan/norms.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using namespace ascan;
using ascan::testing::clause;

namespace {

NormTable four_pair_table() {
  return NormTable({{{AscType::kTranS, "eat"}, 8},
                    {{AscType::kIntranS, "eat"}, 2},
                    {{AscType::kTranS, "see"}, 2},
                    {{AscType::kIntranS, "run"}, 88}},
                   "four");
}

std::string serialize(const NormTable& t) {
  std::ostringstream out;
  write_norms(out, t);
  return out.str();
}

std::string load_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_norms(in);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNorms);
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const char* what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("single ditransitive document") {
  Document d = parse_conllu(clause(AscType::kDitran, "give"), "one");
  NormTable t = build_norms({d}, "one");
  CHECK(t.total() == 1);
  CHECK(t.pair_counts().size() == 1);
  CHECK(t.pair_count(AscType::kDitran, "give") == 1);
  CHECK(t.contingency(AscType::kDitran, "give") == ContingencyCells{1, 0, 0, 0});
  CHECK(t.source() == "one");
  CHECK(t.version() == kNormFormatVersion);
}

TEST_CASE("contingency cells") {
  NormTable t = four_pair_table();
  CHECK(t.total() == 100);
  CHECK(t.type_count(AscType::kTranS) == 10);
  CHECK(t.lemma_count("eat") == 10);
  CHECK(t.contingency(AscType::kTranS, "eat") == ContingencyCells{8, 2, 2, 88});
  CHECK(t.contingency(AscType::kTranS, "fly") == ContingencyCells{0, 0, 10, 90});
  CHECK(t.contingency(AscType::kDitran, "fly") == ContingencyCells{0, 0, 0, 100});
}

TEST_CASE("cells are non-negative and sum to the total") {
  NormTable t = four_pair_table();
  for (AscType c : kAllAscTypes) {
    for (const char* v : {"eat", "see", "run", "absent"}) {
      auto x = t.contingency(c, v);
      CHECK(x.a >= 0);
      CHECK(x.b >= 0);
      CHECK(x.c_cell >= 0);
      CHECK(x.d >= 0);
      CHECK(x.total() == t.total());
    }
  }
}

TEST_CASE("empty inputs are rejected") {
  CHECK_THROWS_WITH_AS(build_norms({}, "none"), doctest::Contains("empty norm table"), Error);
  Document no_tags = parse_conllu(ascan::testing::distractor(0), "d");
  CHECK_THROWS_WITH_AS(build_norms({no_tags}, "none"), doctest::Contains("empty norm table"),
                       Error);
  CHECK_THROWS_AS(NormTable({{{AscType::kTranS, "eat"}, 0}}, "zero"), Error);
  CHECK_THROWS_AS(NormTable({{{AscType::kTranS, ""}, 3}}, "blank"), Error);
}

TEST_CASE("serialized layout") {
  CHECK(serialize(four_pair_table()) ==
        "#source=four\n#version=1.0.0\n#total=100\n"
        "INTRAN_S\teat\t2\nINTRAN_S\trun\t88\nTRAN_S\teat\t8\nTRAN_S\tsee\t2\n");
}

TEST_CASE("round trip is lossless and byte-identical") {
  NormTable t = four_pair_table();
  std::string first = serialize(t);
  std::istringstream in(first);
  NormTable back = read_norms(in);
  CHECK(back == t);
  CHECK(serialize(back) == first);

  auto dir = ascan::testing::scratch_dir("norms_rt");
  save_norms(t, dir / "t.tsv");
  CHECK(load_norms(dir / "t.tsv") == t);
  CHECK(ascan::testing::read_file(dir / "t.tsv") == first);
}

TEST_CASE("damaged files are rejected") {
  std::string good = serialize(four_pair_table());
  CHECK(contains(load_error(""), "malformed norm file"));
  CHECK(contains(load_error(good.substr(0, good.size() - 5)), "malformed norm file"));
  CHECK(contains(load_error(good.substr(0, 20)), "malformed norm file"));

  std::string bad_total = good;
  bad_total.replace(bad_total.find("#total=100"), 10, "#total=101");
  CHECK(contains(load_error(bad_total), "inconsistent norm table"));

  std::string bad_version = good;
  bad_version.replace(bad_version.find("1.0.0"), 5, "2.0.0");
  CHECK(contains(load_error(bad_version), "version mismatch"));

  std::string minor = good;
  minor.replace(minor.find("1.0.0"), 5, "1.3.0");
  CHECK(load_error(minor).empty());

  std::string unsorted =
      "#source=x\n#version=1.0.0\n#total=3\nTRAN_S\tsee\t2\nTRAN_S\teat\t1\n";
  CHECK(contains(load_error(unsorted), "malformed norm file"));

  std::string unknown_type = "#source=x\n#version=1.0.0\n#total=1\nTRANS\tsee\t1\n";
  CHECK(contains(load_error(unknown_type), "malformed norm file"));

  std::string zero = "#source=x\n#version=1.0.0\n#total=0\nTRAN_S\tsee\t0\n";
  CHECK_FALSE(load_error(zero).empty());

  CHECK_THROWS_AS(load_norms("/nonexistent/ascan/norms.tsv"), Error);
}

TEST_CASE("build is order-insensitive and matches a recount") {
  std::mt19937_64 rng(3);
  std::vector<Document> docs;
  std::map<std::pair<AscType, std::string>, std::int64_t> expected;
  for (int i = 0; i < 10; ++i) {
    auto [text, plan] = ascan::testing::random_document(rng, 10);
    docs.push_back(parse_conllu(text, "d" + std::to_string(i)));
    for (const auto& p : plan) ++expected[{p.type, p.lemma}];
  }
  NormTable a = build_norms(docs, "x");
  CHECK(a.pair_counts() == expected);
  std::reverse(docs.begin(), docs.end());
  CHECK(build_norms(docs, "x") == a);
  std::shuffle(docs.begin(), docs.end(), rng);
  CHECK(build_norms(docs, "x") == a);

  // Marginals agree with the pair counts.
  std::int64_t sum_types = 0, sum_lemmas = 0;
  for (AscType t : kAllAscTypes) sum_types += a.type_count(t);
  for (const auto& [lemma, n] : a.lemma_counts()) sum_lemmas += n;
  CHECK(sum_types == a.total());
  CHECK(sum_lemmas == a.total());
}

TEST_CASE("builder merge equals a single pass") {
  Tagger tagger;
  Document d1 = parse_conllu(clause(AscType::kTranS, "eat") + clause(AscType::kAttr, "be"), "a");
  Document d2 = parse_conllu(clause(AscType::kTranS, "eat"), "b");
  NormBuilder left, right, all;
  left.add(tagger.tag_document(d1));
  right.add(tagger.tag_document(d2));
  all.add(tagger.tag_document(d1));
  all.add(tagger.tag_document(d2));
  left.merge(right);
  CHECK(left.total() == 3);
  CHECK(left.finish("m") == all.finish("m"));
}

TEST_CASE("selector resolution") {
  CHECK(bundled_norm_names() == std::vector<std::string>{"demo"});
  NormTable demo = resolve_norms("demo");
  CHECK(demo.source() == "demo");
  CHECK(demo.total() > 0);

  auto dir = ascan::testing::scratch_dir("norms_resolve");
  save_norms(four_pair_table(), dir / "cow.tsv");
  CHECK(resolve_norms((dir / "cow.tsv").string()) == four_pair_table());
  ::setenv("ASCAN_NORMS_DIR", dir.c_str(), 1);
  CHECK(resolve_norms("cow") == four_pair_table());
  CHECK_THROWS_AS(resolve_norms("subt"), Error);
  ::unsetenv("ASCAN_NORMS_DIR");
  CHECK_THROWS_AS(resolve_norms("cow"), Error);
}

TEST_CASE("bundled demo table matches the demo corpus") {
  std::vector<Document> docs;
  for (int i = 0; i < 12; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "demo_%02d.conllu", i);
    std::string text = ascan::testing::read_file(std::string(ASCAN_DATA_DIR) + "/demo_corpus/" + name);
    REQUIRE_FALSE(text.empty());
    docs.push_back(parse_conllu(text, name));
  }
  CHECK(build_norms(docs, "demo") == resolve_norms("demo"));
}
