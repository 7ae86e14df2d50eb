#pragma once

// Test plumbing: moves numeric structure constants between the library's
// types and the oracle's, and generates random instances.

#include "oracle.hpp"

#include "salg/corpus.hpp"
#include "salg/identities.hpp"
#include "salg/maps.hpp"
#include "salg/superalg.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace support {

// Requires every structure constant and map entry to be a constant.
oracle::Table to_oracle(const salg::HomSuperAlgebra& h);

// Evaluates every parameter at the given values (all must be covered).
salg::HomSuperAlgebra at_point(const salg::HomSuperAlgebra& h, const std::map<std::string, mpq_class>& point);

// Random point for the free parameters of h's field: nonzero small
// rationals, retried until every entry of h stays defined.
std::map<std::string, mpq_class> random_point(const salg::HomSuperAlgebra& h, std::mt19937& rng);

// Oracle verdict over `points` random parameter values (holds iff it holds
// at every point). Constant instances are checked once.
bool oracle_holds(const std::string& name, const salg::HomSuperAlgebra& h, std::mt19937& rng, int points = 2);

struct RandomSpec {
    std::size_t max_dim = 3;
    unsigned long modulus = 0;
    int range = 2;          // coefficients in [-range, range]
    double density = 0.5;   // chance an allowed coefficient is nonzero
};

salg::Basis random_basis(std::size_t n, std::mt19937& rng);
// Graded table: e_i e_j only has components of parity |i| + |j|.
salg::SuperAlgebra random_graded(const RandomSpec& s, std::mt19937& rng);
salg::LinearMap random_even_map(const salg::SuperAlgebra& a, const RandomSpec& s, std::mt19937& rng);

// Super-skewsymmetric graded table paired with a multiplicative even map,
// built as the Yau twist of a random skew table by a diagonal automorphism
// that scales a weight grading.
salg::HomSuperAlgebra random_multiplicative_skew(const RandomSpec& s, std::mt19937& rng);

// Text of a random valid .salg document (parameters, constraints, defaults,
// notes, graded products with rational expressions, even maps, claims).
std::string random_document(std::mt19937& rng);

// A guaranteed-malformed variant of a valid document, with the 1-based line
// the defect was placed on (0 when the defect is not tied to one line).
struct Mutant {
    std::string text;
    int line = 0;
    std::string kind;
};
Mutant malform(const std::string& valid, std::mt19937& rng);

std::string render_tuple(const salg::Basis& b, const std::vector<std::size_t>& t);

}  // namespace support
