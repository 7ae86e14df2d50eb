#pragma once

#include "salg/superalg.hpp"

namespace salg {

using EvenLinearMap = LinearMap;

IdentityReport is_even(const LinearMap& f, const Basis& b);
IdentityReport is_weak_morphism(const SuperAlgebra& src, const SuperAlgebra& dst, const LinearMap& f);
IdentityReport is_morphism(const HomSuperAlgebra& src, const HomSuperAlgebra& dst, const LinearMap& f);
IdentityReport check_multiplicative(const HomSuperAlgebra& h);

LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g
LinearMap power(const LinearMap& f, unsigned k);
LinearMap inverse(const LinearMap& f);

// (A, beta∘mu) as a plain algebra.
SuperAlgebra compose_product(const SuperAlgebra& a, const LinearMap& beta);

// (A, beta∘mu, beta∘alpha); beta must be an even weak endomorphism of (A, mu).
HomSuperAlgebra yau_twist(const HomSuperAlgebra& h, const LinearMap& beta);

// Same construction without the endomorphism hypothesis; multiplicativity
// is still computed.
HomSuperAlgebra compose_twist(const HomSuperAlgebra& h, const LinearMap& beta);

SuperAlgebra untwist(const HomSuperAlgebra& h);

HomSuperAlgebra derived(const HomSuperAlgebra& h, unsigned n);

HomSuperAlgebra with_multiplicativity(HomSuperAlgebra h);

}  // namespace salg
