// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "stanley/matroid_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "stanley/catalog.hpp"
#include "stanley/errors.hpp"

namespace stanley {
namespace {

std::vector<NamedMatroid> ParseText(const std::string& text) {
  std::istringstream in(text);
  return ParseMatroids(in);
}

std::string ParseErrorOf(const std::string& text) {
  try {
    ParseText(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(MatroidIoTest, ParsesRecordsWithCommentsAndContinuations) {
  const auto records = ParseText(
      "# two records\n"
      "matroid a   # trailing comment\n"
      "n 3\nrank 2\n"
      "bases 0,1 0,2\n"
      "bases 1,2\n"
      "end\n\n"
      "matroid zero\nn 2\nbases\nend\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].name, "a");
  EXPECT_EQ(records[0].matroid, Uniform(2, 3));
  EXPECT_EQ(records[1].matroid.rank(), 0);
  EXPECT_EQ(records[1].matroid.size(), 2);
}

TEST(MatroidIoTest, DashIsTheEmptyBasis) {
  const auto records = ParseText("matroid z\nn 1\nbases -\nend\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].matroid.rank(), 0);
}

TEST(MatroidIoTest, RoundTripsTheCatalog) {
  std::ostringstream out;
  const auto catalog = BuiltinCatalog();
  for (const NamedMatroid& entry : catalog) WriteMatroid(out, entry);
  const auto back = ParseText(out.str());
  ASSERT_EQ(back.size(), catalog.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].name, catalog[i].name);
    EXPECT_EQ(back[i].matroid, catalog[i].matroid);
  }
}

TEST(MatroidIoTest, ErrorsCarryLineNumbers) {
  EXPECT_NE(ParseErrorOf("matroid a\nn x\n").find("line 2"), std::string::npos);
  EXPECT_NE(ParseErrorOf("matroid a\nn 2\nbases 0\n").find("missing 'end'"),
            std::string::npos);
  EXPECT_NE(ParseErrorOf("n 2\n").find("outside"), std::string::npos);
  EXPECT_NE(ParseErrorOf("matroid a\nn 2\nbases 0,5\nend\n").find("exceeds"),
            std::string::npos);
  EXPECT_NE(ParseErrorOf("matroid a\nn 2\nrank 2\nbases 0\nend\n").find("declares rank"),
            std::string::npos);
  EXPECT_NE(ParseErrorOf("matroid a\nfoo\nend\n").find("unknown keyword"),
            std::string::npos);
}

TEST(MatroidIoTest, InvalidBasesAreRejected) {
  try {
    ParseText("matroid a\nn 4\nbases 0,1 2,3\nend\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExchangeViolation);
  }
}

TEST(MatroidIoTest, MissingFileIsAParseError) {
  try {
    ReadMatroidFile("/nonexistent/stanley.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

}  // namespace
}  // namespace stanley
