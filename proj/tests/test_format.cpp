#include <string>

#include "doctest.h"
#include "houghton/descriptor.hpp"
#include "houghton/format.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

void expect_parse_error(const char* what, void (*f)(const std::string&),
                        const std::string& text) {
  INFO(what, ": ", text);
  try {
    f(text);
    CHECK_MESSAGE(false, "expected a parse error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

void parse_point_ray(const std::string& s) { parse_point(s); }
void parse_perm_v(const std::string& s) { parse_perm(s); }
void parse_element_v(const std::string& s) { parse_element(s); }
void parse_word_v(const std::string& s) { parse_word(s); }
void parse_lattice_v(const std::string& s) { parse_lattice(s); }
void parse_descriptor_v(const std::string& s) { parse_descriptor(s); }

}  // namespace

TEST_CASE("points round-trip through text in both modes") {
  CHECK(parse_point("3:7") == ray_point(3, 7));
  CHECK(parse_point(" 1 : 2 ") == ray_point(1, 2));
  CHECK(format_point(ray_point(3, 7)) == "3:7");
  CHECK(parse_point("-4", true) == line_point(-4));
  CHECK(parse_point("0", true) == line_point(0));
  CHECK(format_point(line_point(-4)) == "-4");
  expect_parse_error("missing colon", parse_point_ray, "37");
  expect_parse_error("trailing text", parse_point_ray, "3:7x");
  expect_parse_error("zero ray", parse_point_ray, "0:7");
}

TEST_CASE("permutations round-trip through their cycle text") {
  const char* samples[] = {
      "((1,1),(1,2))",
      "((1,1),(1,3),(2,2))((3,1),(3,2))",
      "(0,1,2)",
      "(-3,5,7)(8,9)",
      "()",
  };
  for (const char* s : samples) {
    FinitePermutation p = parse_perm(s);
    CHECK(parse_perm(to_string(p)) == p);
  }
  // Canonical printing starts each cycle at its least point.
  CHECK(to_string(parse_perm("((1,2),(1,1))")) == "((1,1),(1,2))");
  CHECK(to_string(parse_perm("(5,-3,7)")) == "(-3,7,5)");

  expect_parse_error("no cycle", parse_perm_v, "");
  expect_parse_error("unclosed", parse_perm_v, "((1,1),(1,2)");
  expect_parse_error("unclosed line cycle", parse_perm_v, "(1,2");
  expect_parse_error("stray text", parse_perm_v, "() junk");
  // Mixing ray and line points parses but is a domain error.
  CHECK_THROWS_AS(parse_perm("((1,1),2)"), error);
}

TEST_CASE("elements round-trip through their header text") {
  const char* samples[] = {
      "H[n=3; s=(1,-1,0); {(2,1)->(1,1)}]",
      "H[n=2; s=(0,0); {(1,1)->(1,2),(1,2)->(1,1)}]",
      "H[n=4; s=(0,0,0,0); {}]",
  };
  for (const char* s : samples) {
    HoughtonElement g = parse_element(s);
    CHECK(to_string(g) == s);
    CHECK(parse_element(to_string(g)) == g);
  }
  // Round-trip of a computed element.
  HoughtonElement g = he_mul(he_generator(3, 2), he_inv(he_generator(3, 3)));
  CHECK(parse_element(to_string(g)) == g);

  expect_parse_error("bad prefix", parse_element_v, "G[n=2; s=(0,0); {}]");
  expect_parse_error("missing table", parse_element_v, "H[n=2; s=(0,0)]");
  expect_parse_error("trailing text", parse_element_v,
                     "H[n=2; s=(0,0); {}] x");
  // Structurally valid text with inconsistent shifts is a domain error.
  CHECK_THROWS_AS(parse_element("H[n=2; s=(1,0); {}]"), error);
}

TEST_CASE("words accept generator, permutation and named letters") {
  GroupWord w = parse_word("g2^-1 g3^-1 g2 g3");
  CHECK(w.terms.size() == 4);
  HoughtonElement g = word_eval(3, w);
  CHECK(he_to_perm(g) == parse_perm("((1,1),(1,2))"));

  GroupWord star = parse_word("g2^2 * g3^-2");
  CHECK(word_eval(3, star) ==
        he_mul(he_pow(he_generator(3, 2), 2), he_pow(he_generator(3, 3), -2)));

  GroupWord with_perm = parse_word("p((1,1),(1,2)) g2");
  CHECK(with_perm.terms[0].kind == WordTerm::Kind::perm);

  WordEnv env;
  env.emplace("alpha", he_pow(he_generator(2, 2), 3));
  GroupWord named = parse_word("alpha^2 g2^-6");
  CHECK(word_eval(2, named, &env).is_identity());

  CHECK(parse_word("1").terms.empty());
  CHECK(word_eval(2, parse_word("  ")).is_identity());
  expect_parse_error("number letter", parse_word_v, "g2 7");
  expect_parse_error("bad generator", parse_word_v, "g2x^2");
  expect_parse_error("dangling caret", parse_word_v, "g2^");
}

TEST_CASE("lattices round-trip through row text") {
  LatticeBasis b = parse_lattice("2,0;0,3");
  CHECK(b.dim == 2);
  CHECK(b.rows == std::vector<LatRow>{{2, 0}, {0, 3}});
  CHECK(format_lattice(b) == "2,0;0,3");
  CHECK(parse_lattice("5").rows == std::vector<LatRow>{{5}});
  CHECK(parse_lattice(" 1 , -1 ; 1 , 1 ").rows ==
        std::vector<LatRow>{{1, -1}, {1, 1}});
  expect_parse_error("ragged rows", parse_lattice_v, "1,2;3");
  expect_parse_error("empty", parse_lattice_v, "");
  expect_parse_error("letters", parse_lattice_v, "1,a");
}

TEST_CASE("descriptors round-trip through their field text") {
  SubgroupDescriptor d = parse_descriptor("n=3; L=2,0;0,3; type=alt");
  CHECK(d.n == 3);
  CHECK(d.sym_type == SymType::alt);
  CHECK(format_descriptor(d) == "n=3; L=2,0;0,3; type=alt");

  SubgroupDescriptor tw =
      parse_descriptor("n=3; L=2,0;0,2; type=alt; eps=(swap,trivial)");
  CHECK(tw.twists ==
        std::vector<Twist>{Twist::swap_pair, Twist::trivial});
  CHECK(parse_descriptor(format_descriptor(tw)).twists == tw.twists);

  expect_parse_error("missing type", parse_descriptor_v, "n=3; L=2,0;0,3");
  expect_parse_error("unknown field", parse_descriptor_v,
                     "n=3; L=1,0;0,1; type=alt; extra=1");
  expect_parse_error("bad type", parse_descriptor_v,
                     "n=3; L=1,0;0,1; type=sym");
}
