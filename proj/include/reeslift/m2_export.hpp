#ifndef REESLIFT_M2_EXPORT_HPP
#define REESLIFT_M2_EXPORT_HPP

#include <sstream>
#include <string>

#include "plane_rees.hpp"
#include "rees_space.hpp"

namespace reeslift {

namespace detail {

inline std::string m2_field(const FieldSpec& f) {
    if (f.rational) return "QQ";
    return "ZZ/" + std::to_string(f.p);
}

template <class K>
std::string m2_form(const BinaryForm<K>& f) {
    auto sp = VarSpace::t_only();
    return form_to_poly(f, sp).str();
}

}  // namespace detail

/// Standalone Macaulay2 script: rebuild the kernel of the monomial-times-
/// (alpha,beta) substitution independently and assert it equals the ideal
/// spanned by our generators.
template <class K>
std::string m2_space_script(const ScrollCurve<K>& sc, const GeneratorSet<K>& gens) {
    std::ostringstream os;
    os << "-- space-curve cross-check: kernel vs. produced generators\n";
    os << "kk = " << detail::m2_field(sc.field) << ";\n";
    os << "S = kk[T0,T1,s];\n";
    os << "alpha = " << detail::m2_form(sc.alpha) << ";\n";
    os << "beta = " << detail::m2_form(sc.beta) << ";\n";
    os << "im = {T0, T1";
    for (int i = 0; i <= sc.mu1; ++i)
        os << ", alpha*T0^" << (sc.mu1 - i) << "*T1^" << i << "*s";
    for (int i = 0; i <= sc.mu2; ++i)
        os << ", beta*T0^" << (sc.mu2 - i) << "*T1^" << i << "*s";
    os << "};\n";
    os << "R = kk[T0,T1";
    for (int i = 0; i <= sc.mu1; ++i) os << ",X" << i;
    for (int i = 0; i <= sc.mu2; ++i) os << ",Y" << i;
    os << "];\n";
    os << "Phi = map(S, R, im);\n";
    os << "Iker = ker Phi;\n";
    os << "Iours = ideal(";
    for (std::size_t i = 0; i < gens.gens.size(); ++i) {
        if (i) os << ",\n  ";
        os << gens.gens[i].poly.str();
    }
    os << ");\n";
    os << "assert(Iker == Iours);\n";
    os << "print \"space-curve generators verified\";\n";
    return os.str();
}

/// Standalone Macaulay2 script: substitute the curve into each family member
/// and assert the image vanishes (membership in the defining ideal).
template <class K>
std::string m2_plane_script(const MuData<K>& md, const DDFamily<K>& fam) {
    std::ostringstream os;
    os << "-- plane-curve cross-check: family members vanish under the curve map\n";
    os << "kk = " << detail::m2_field(md.curve.field) << ";\n";
    os << "S = kk[T0,T1,s];\n";
    for (int l = 0; l < 3; ++l)
        os << "f" << l << " = " << detail::m2_form(md.curve.f[static_cast<std::size_t>(l)])
           << ";\n";
    os << "im = {T0, T1, f0*s, f1*s, f2*s};\n";
    os << "R = kk[T0,T1,Z0,Z1,Z2];\n";
    os << "psi = map(S, R, im);\n";
    os << "assert(psi(" << p_form(md).str() << ") == 0);\n";
    for (const auto& m : fam.members) {
        if (!m.poly) continue;
        os << "assert(psi(" << m.poly->str() << ") == 0); -- (a,b)=(" << m.a << "," << m.b
           << ")\n";
    }
    os << "print \"plane-curve members verified\";\n";
    return os.str();
}

}  // namespace reeslift

#endif
