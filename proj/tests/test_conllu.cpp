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

#include <random>
#include <sstream>

#include "ascan/conllu.hpp"
#include "ascan/error.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using ascan::Document;
using ascan::Error;
using ascan::parse_conllu;

namespace {

const char* kDogBarked =
    "# sent_id = 1\n"
    "# text = The dog barked .\n"
    "1\tThe\tthe\tDET\tDT\t_\t2\tdet\t_\t_\n"
    "2\tdog\tdog\tNOUN\tNN\t_\t3\tnsubj\t_\t_\n"
    "3\tbarked\tbark\tVERB\tVBD\t_\t0\troot\t_\t_\n"
    "4\t.\t.\tPUNCT\t.\t_\t3\tpunct\t_\tSpaceAfter=No\n"
    "\n";

std::string error_of(const std::string& text) {
  try {
    parse_conllu(text, "x");
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("empty stream gives an empty document") {
  Document d = parse_conllu(std::string_view(""), "empty.conllu");
  CHECK(d.sentences.empty());
  CHECK(d.source_id == "empty.conllu");
}

TEST_CASE("single sentence fixture") {
  Document d = parse_conllu(kDogBarked, "dog");
  REQUIRE(d.sentences.size() == 1);
  const auto& s = d.sentences[0];
  REQUIRE(s.size() == 4);
  CHECK(s.at(3).form == "barked");
  CHECK(s.at(3).lemma == "bark");
  CHECK(s.at(3).head == 0);
  CHECK(s.at(2).deprel == "nsubj");
  CHECK(s.dependents(3) == std::vector<int>{2, 4});
  CHECK(s.dependents(0) == std::vector<int>{3});
}

TEST_CASE("CRLF line endings and missing trailing blank line") {
  std::string text = kDogBarked;
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += "\r\n";
    else crlf += c;
  }
  crlf.resize(crlf.size() - 2);  // drop the final blank line
  Document a = parse_conllu(crlf, "dog");
  Document b = parse_conllu(kDogBarked, "dog");
  CHECK(a == b);
}

TEST_CASE("multiword ranges and empty nodes are skipped") {
  const char* text =
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\tnot\tPART\t_\t_\t3\tadvmod\t_\t_\n"
      "3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3.1\tgo\tgo\tVERB\t_\t_\t_\t_\t3:conj\t_\n"
      "\n";
  Document d = parse_conllu(text, "x");
  REQUIRE(d.sentences.size() == 1);
  CHECK(d.sentences[0].size() == 3);
}

TEST_CASE("malformed token lines name the line number") {
  SUBCASE("nine columns") {
    std::string e = error_of("# c\n1\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\n");
    CHECK(e.find("malformed token line 2") != std::string::npos);
  }
  SUBCASE("non-integer head") {
    std::string e = error_of("1\tdog\tdog\tNOUN\t_\t_\tx\troot\t_\t_\n");
    CHECK(e.find("malformed token line 1") != std::string::npos);
  }
  SUBCASE("non-integer id") {
    std::string e = error_of("a\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n");
    CHECK(e.find("malformed token line 1") != std::string::npos);
  }
}

TEST_CASE("invalid trees name the sentence index") {
  std::string ok = ascan::testing::conllu_block({{"a", "a", "X", 0, "root"}});
  SUBCASE("headless") {
    std::string bad = ascan::testing::conllu_block(
        {{"a", "a", "X", 2, "dep"}, {"b", "b", "X", 1, "dep"}});
    std::string e = error_of(ok + bad);
    CHECK(e.find("invalid sentence 1") != std::string::npos);
  }
  SUBCASE("cycle below a root") {
    std::string bad = ascan::testing::conllu_block({{"a", "a", "X", 0, "root"},
                                                    {"b", "b", "X", 3, "dep"},
                                                    {"c", "c", "X", 2, "dep"}});
    std::string e = error_of(ok + ok + bad);
    CHECK(e.find("invalid sentence 2") != std::string::npos);
    CHECK(e.find("cycle") != std::string::npos);
  }
  SUBCASE("self head") {
    std::string bad = ascan::testing::conllu_block({{"a", "a", "X", 1, "root"}});
    CHECK(error_of(bad).find("invalid sentence 0") != std::string::npos);
  }
  SUBCASE("head out of range") {
    std::string bad = ascan::testing::conllu_block({{"a", "a", "X", 0, "root"}, {"b", "b", "X", 7, "dep"}});
    CHECK(error_of(bad).find("out of range") != std::string::npos);
  }
  SUBCASE("two roots") {
    std::string bad = ascan::testing::conllu_block({{"a", "a", "X", 0, "root"}, {"b", "b", "X", 0, "root"}});
    CHECK(error_of(bad).find("more than one root") != std::string::npos);
  }
}

TEST_CASE("token count matches the number of plain token lines") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto [text, plan] = ascan::testing::random_document(rng, 1 + static_cast<int>(rng() % 20));
    // Sprinkle comments, ranges and empty nodes that must not count.
    std::string noisy = "# newdoc\n" + text;
    std::size_t expected = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') ++expected;
    }
    Document d = parse_conllu(noisy, "r");
    CHECK(d.token_count() == expected);
    CHECK(parse_conllu(noisy, "r") == d);  // deterministic
  }
}
