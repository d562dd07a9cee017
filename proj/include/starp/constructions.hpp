/** @file constructions.hpp
 *  Explicit permutation groups: projective lines, external lines to a conic
 *  in PG(2,q), tuple actions of PGL(2,q), semilinear groups on GF(q)*,
 *  diagonal actions, embedded fixtures and wreath structure expressions.
 */
#pragma once

#include "starp/actions.hpp"
#include "starp/field.hpp"
#include "starp/wreath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starp {

enum class Psl2Variant { PSL, PGL, PGammaL, SL };

Psl2Variant parse_psl2_variant(const std::string &name);

/// Action on GF(q) u {inf}: field element e is point e, infinity is point q.
PermGroup psl2_action(std::uint64_t q, Psl2Variant variant, const Limits &limits = {});

struct ExternalLines {
  PermGroup group;                          ///< action on the external lines
  std::size_t tangents = 0, secants = 0, externals = 0;
  std::vector<std::vector<Point>> lines;    ///< external lines as sorted PG(2,q) point indices
};

/// q even, q >= 4; variant PSL (= PGL) or PGammaL. Lines are ordered by
/// their sorted point lists, points (x:y:z) normalized with leading 1.
ExternalLines external_lines(std::uint64_t q, Psl2Variant variant, const Limits &limits = {});
inline PermGroup external_lines_action(std::uint64_t q, Psl2Variant variant, const Limits &limits = {}) {
  return external_lines(q, variant, limits).group;
}

struct PdivisibleExample {
  std::uint64_t p = 2;
  PermGroup natural;       ///< PGL(2,q) on q + 1 points
  InducedAction tuples;    ///< action on the orbit of (0, 1, ..., p-1)
  BlockSystem blocks;      ///< tuples grouped by underlying set
  InducedAction quotient;  ///< action on those blocks
};

PdivisibleExample pgl2_pdivisible_example(std::uint64_t q, const Limits &limits = {});

struct GammaL1 {
  std::uint64_t r = 2, d = 2, f = 1, p = 2;
  Field field;             ///< GF(r^(df)); nonzero element e is point e - 1
  Permutation xi_hat;      ///< x -> xi x
  Permutation phi;         ///< x -> x^(r^(df/f_p))
  Permutation sigma;       ///< phi^(f_p/p)
  PermGroup x;             ///< <xi_hat, phi>
  PermGroup y;             ///< <xi_hat>
};

GammaL1 gammal1_sylow(std::uint64_t r, std::uint64_t d, std::uint64_t f, std::uint64_t p,
                      const Limits &limits = {});

/// Number of one-dimensional GF(r^f)-subspaces of the field fixed by sigma.
std::size_t count_fixed_subspaces(const Permutation &sigma, const Field &field, std::uint64_t r,
                                  std::uint64_t f);

/// T x T on the elements of T, (a, b): t -> a^-1 t b; elements in
/// lexicographic order of their image tables.
PermGroup diagonal_action(const PermGroup &t, const Limits &limits = {});

/// Affine group x -> a x + b over GF(p) with a in the subgroup of order k.
PermGroup frobenius_group(std::uint64_t p, std::uint64_t k);

PermGroup fixture(const std::string &name);
std::vector<std::string> fixture_names();

struct Structure {
  PermGroup group;
  std::optional<WreathProduct> wreath;  ///< set when the outermost operation is Wr
};

/// Parses expressions such as "S4 Wr 3", "(7:3) Wr 2", "2 Wr PSL(2,5)",
/// "3 Wr 3 Wr 2" (left associative). Atoms: n (regular cyclic), p:k,
/// Sn, An, Cn, PSL(2,q), PGL(2,q), PGammaL(2,q).
Structure build_structure(const std::string &expression, const Limits &limits = {});

} // namespace starp
