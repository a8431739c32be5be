#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "maniforge/maniplex.hpp"

namespace maniforge {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Group presentation on involutory generators 0..n-1. The relators g^2 are
/// implicit and never listed.
struct GroupPresentation {
  std::size_t generator_count{0};
  std::vector<std::vector<Colour>> relators;
};

/// Text format: "gens <n>" then one relator per line as space-separated
/// generator indices. '#' starts a comment. Throws ParseError.
GroupPresentation read_presentation(std::istream& in);

/// <r0, r1 | (r0 r1)^m>, the flag action of an m-gon.
GroupPresentation polygon_presentation(std::size_t m);

/// String Coxeter group [p1, ..., pk] with optional extra relators.
GroupPresentation string_presentation(const std::vector<std::size_t>& schlafli,
                                      std::vector<std::vector<Colour>> extra = {});

/// Word w repeated k times.
std::vector<Colour> power(const std::vector<Colour>& w, std::size_t k);

/// Right action of each generator on the cosets of the trivial subgroup.
/// action[g][c] is the coset c*g; coset 0 is the identity.
struct CosetTable {
  std::vector<std::vector<Flag>> action;
  std::size_t size() const { return action.empty() ? 0 : action.front().size(); }
};

/// Hasselgrove-Leech-Trotter enumeration with deduction and coincidence
/// processing. Cosets are numbered in order of first definition after
/// coincidences are collapsed. Throws CosetOverflow when the table needs
/// more than `max_cosets` rows, dead rows included.
CosetTable coset_enumerate(const GroupPresentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// Flags are cosets, colour i acts as generator i. Throws CosetOverflow or
/// NotManiplex.
Maniplex maniplex_from_presentation(const GroupPresentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// kDefaultMaxCosets unless MANIFORGE_MAX_COSETS holds a positive integer.
std::size_t max_cosets_from_env();

}  // namespace maniforge
