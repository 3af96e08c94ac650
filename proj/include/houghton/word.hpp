// Words over the standard generators g_k, literal finitary permutation
// letters, and named auxiliary elements resolved through an environment.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/errors.hpp"
#include "houghton/perm.hpp"

namespace houghton {

struct WordTerm {
  enum class Kind { generator, perm, named };
  Kind kind = Kind::generator;
  int gen_index = 0;        // generator letters g_k
  FinitePermutation perm;   // literal permutation letters
  std::string name;         // named letters
  std::int64_t exponent = 1;
};

struct GroupWord {
  std::vector<WordTerm> terms;
};

using WordEnv = std::map<std::string, HoughtonElement>;

inline HoughtonElement word_eval(int n, const GroupWord& w,
                                 const WordEnv* env = nullptr) {
  HoughtonElement acc = he_identity(n);
  for (const WordTerm& t : w.terms) {
    HoughtonElement letter = he_identity(n);
    switch (t.kind) {
      case WordTerm::Kind::generator:
        letter = he_generator(n, t.gen_index);
        break;
      case WordTerm::Kind::perm:
        letter = t.perm.mode() == 2 ? he_from_line_perm(t.perm)
                                    : he_from_perm(n, t.perm);
        if (letter.n() != n)
          fail(errc::ambient_mismatch, "permutation letter needs n=2");
        break;
      case WordTerm::Kind::named: {
        if (!env || !env->count(t.name))
          fail(errc::invalid_argument, "unknown letter " + t.name);
        letter = env->at(t.name);
        if (letter.n() != n)
          fail(errc::ambient_mismatch, "letter " + t.name + " has wrong n");
        break;
      }
    }
    acc = he_mul(acc, he_pow(letter, t.exponent));
  }
  return acc;
}

inline std::string to_string(const GroupWord& w) {
  if (w.terms.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const WordTerm& t : w.terms) {
    if (!first) os << ' ';
    first = false;
    switch (t.kind) {
      case WordTerm::Kind::generator: os << 'g' << t.gen_index; break;
      case WordTerm::Kind::perm: os << 'p' << houghton::to_string(t.perm); break;
      case WordTerm::Kind::named: os << t.name; break;
    }
    if (t.exponent != 1) os << '^' << t.exponent;
  }
  return os.str();
}

}  // namespace houghton
