#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semacode/congruence.hpp"
#include "semacode/projective.hpp"

using namespace semacode;

namespace {

std::string data(const std::string& name) { return std::string(SEMACODE_TEST_DATA) + "/" + name; }

template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, AlphabetFormatting) {
  const Alphabet single({"a", "b"});
  EXPECT_EQ(single.format({0, 1, 1}), "abb");
  EXPECT_EQ(single.format({}), "@eps");
  EXPECT_EQ(single.parse("@eps"), Word{});
  EXPECT_EQ(single.parse("a b b"), (Word{0, 1, 1}));
  const Alphabet multi({"x", "y1", "y10"});
  EXPECT_EQ(multi.format({1, 2}), "y1 y10");
  EXPECT_EQ(multi.parse("y1 y10"), (Word{1, 2}));
  EXPECT_EQ(multi.parse("y10y1"), (Word{2, 1}));
  EXPECT_THROW(single.parse("abc"), Error);
  EXPECT_THROW(Alphabet({"a", "a"}), Error);
}

TEST(Io, WordLists) {
  const Alphabet a = Alphabet::binary();
  const WordSet words{a.parse("b"), a.parse("ab"), Word{}};
  std::stringstream ss;
  write_words(ss, a, words);
  EXPECT_EQ(ss.str(), "@eps\nb\nab\n");
  EXPECT_EQ(read_words(ss, a), words);
}

TEST(Io, IdealWithOwnAlphabet) {
  std::stringstream ss("# comment\nside: left\nalphabet: x y z\nzy\nx\n");
  const Ideal i = read_ideal(ss);
  EXPECT_EQ(i.alphabet().size(), 3u);
  EXPECT_TRUE(i.contains(i.alphabet().parse("yzx")));
  EXPECT_FALSE(i.contains(i.alphabet().parse("xz")));
  std::stringstream out;
  write_ideal(out, i);
  EXPECT_EQ(read_ideal(out), i);
  std::stringstream late("side: left\nx\nalphabet: x y\n");
  EXPECT_NE(error_of([&] { read_ideal(late); }).find("line 3"), std::string::npos);
  std::stringstream side("side: sideways\n");
  EXPECT_THROW(read_ideal(side), Error);
}

TEST(Io, PartitionErrorsCarryLineNumbers) {
  std::stringstream dup("k: 2\nk: 3\n");
  EXPECT_NE(error_of([&] { read_partition(dup); }).find("line 2"), std::string::npos);
  std::stringstream nan("k: two\n");
  EXPECT_NE(error_of([&] { read_partition(nan); }).find("line 1"), std::string::npos);
  std::stringstream len("k: 2\nblock: aa ab ba bbb\n");
  EXPECT_THROW(read_partition(len), Error);
  std::ifstream id(data("identity2.part"));
  EXPECT_EQ(read_partition(id), RightCongruenceK::identity(Alphabet::binary(), 2));
}

TEST(Io, LeftInfiniteWordsWithLongNames) {
  const Alphabet multi({"a", "Y", "b@q1"});
  const auto x = parse_left_infinite(multi, "per:(Y) tail:a b@q1");
  EXPECT_EQ(x.period(), (Word{1}));
  EXPECT_EQ(x.tail(), (Word{0, 2}));
  EXPECT_EQ(parse_left_infinite(multi, format_left_infinite(multi, x)), x);
}

TEST(Io, EveryDataFileLoads) {
  for (const auto& entry : std::filesystem::directory_iterator(SEMACODE_TEST_DATA)) {
    const auto path = entry.path();
    std::ifstream in(path);
    const auto ext = path.extension().string();
    SCOPED_TRACE(path.filename().string());
    const std::string name = path.filename().string();
    if (ext == ".tm") EXPECT_NO_THROW(read_machine(in));
    if (ext == ".ideal") EXPECT_NO_THROW(read_ideal(in));
    if (ext == ".seq") EXPECT_NO_THROW(read_sequence(in));
    if (ext == ".graph") {
      if (name == "bad.graph") EXPECT_THROW(read_graph(in), Error);
      else EXPECT_NO_THROW(read_graph(in));
    }
    if (ext == ".part") {
      if (name == "unstable.part") EXPECT_THROW(read_partition(in), Error);
      else EXPECT_NO_THROW(read_partition(in));
    }
  }
}
