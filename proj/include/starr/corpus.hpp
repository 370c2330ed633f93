#ifndef STARR_CORPUS_HPP
#define STARR_CORPUS_HPP

// Built-in arrangements, addressable by name.
//
//   ex4                   xyz(x+y+z) in three variables
//   notsplit              x(x^2-y^2)(x^2-2y^2)(y-z)z over Q(r), r^2 = 2
//   boolean-L             the coordinate hyperplanes in L variables
//   braid-N               x_i - x_j in N variables
//   pencil-K              K lines through the origin of the plane
//   generic-L-N           N hyperplanes in general position in L variables
//   empty-L, single-L     no hyperplane / one hyperplane in L variables
//   weyl-<T><r>           all positive roots, e.g. weyl-B3
//   ideal-<T><r>-<k>      k-th lower ideal of the root poset (see all_lower_ideals)
//   inversion-<perm>      inversion arrangement, e.g. inversion-4123
//   plane-<k>             assorted arrangements in three variables, k = 1..10

#include <optional>
#include <string>
#include <vector>

#include "starr/arrangement.hpp"

namespace starr {

struct CorpusEntry {
  std::string name;
  std::string description;
  Arrangement arrangement;
  /// Preferred eta, when the example comes with one.
  std::optional<Polynomial> eta;
};

/// Throws ArrangementError for unknown or malformed names.
CorpusEntry example(const std::string& name);

/// Named free arrangements with exponents known in advance.
std::vector<std::string> free_corpus();
/// Arrangements in three variables, free and not free.
std::vector<std::string> plane_corpus();
/// Everything shipped: the two lists above plus non-free and higher-rank cases.
std::vector<std::string> full_corpus();

/// Presentation of the cohomology of the Schubert variety of w = 4123 in
/// four variables: x1+x2+x3+x4, (x1+x2+x3)^2, x2x3+x1x3, x1x2.
std::vector<Polynomial> schubert_presentation_4123();

}  // namespace starr

#endif
