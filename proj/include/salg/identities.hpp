#pragma once

#include "salg/superalg.hpp"

#include <string>
#include <vector>

namespace salg {

// Closed registry, in reporting order.
const std::vector<std::string>& checker_names();
bool is_checker(const std::string& name);
std::size_t checker_arity(const std::string& name);

// Runs a registered checker over every basis tuple of its arity.
// Throws on an unknown name. Grading is not enforced here; see validate().
IdentityReport run_check(const std::string& name, const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);

// Both sides of a checker's equation at one basis tuple (residual = lhs - rhs).
// Admissible checkers evaluate on the commutator or plus algebra. For
// composite checkers the first component with a nonzero residual is used.
struct Sides {
    Vector lhs;
    Vector rhs;
    std::string component;
    Vector residual() const { return lhs - rhs; }
};
Sides evaluate_sides(const std::string& name, const HomSuperAlgebra& h, const std::vector<std::size_t>& tuple);

IdentityReport check_left_hom_alternative(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_right_hom_alternative(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_alternative(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_flexible(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_lie(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_malcev(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_malcev_form2(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_malcev_form3(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_jordan(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_lie_admissible(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_malcev_admissible(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_hom_jordan_admissible(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_teichmuller(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_bk_suite(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_cyclic_assoc_relation(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_J_eq_6as(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_J_eq_2S(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);
IdentityReport check_jordan_cyclic_expansion(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);

// The cyclic Jordan expansion with coefficient 4 and the term list exactly as
// printed; kept for comparison, it is not an identity.
IdentityReport check_jordan_expansion_as_printed(const HomSuperAlgebra& h, std::size_t cap = kDefaultCap);

}  // namespace salg
