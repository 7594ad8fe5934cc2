#include "weylstat/closed_forms.hpp"

#include "weylstat/errors.hpp"

namespace weylstat {

const char* family_id(Family f) {
    switch (f) {
        case Family::ADes: return "a-des";
        case Family::AExc: return "a-exc";
        case Family::BDes: return "b-des";
        case Family::BExc: return "b-exc";
        case Family::DDes: return "d-des";
        case Family::DExc: return "d-exc";
        case Family::BDesOverD: return "bdes-over-d";
        case Family::BDesOverBminusD: return "bdes-over-b-minus-d";
    }
    return "?";
}

bool parse_family_id(const std::string& id, Family& out) {
    for (Family f : kAllFamilies)
        if (id == family_id(f)) {
            out = f;
            return true;
        }
    return false;
}

Group family_group(Family f) {
    switch (f) {
        case Family::ADes:
        case Family::AExc: return Group::A;
        case Family::BDes:
        case Family::BExc: return Group::B;
        case Family::DDes:
        case Family::DExc:
        case Family::BDesOverD: return Group::D;
        case Family::BDesOverBminusD: return Group::BminusD;
    }
    throw error("unknown family");
}

Stat family_stat(Family f) {
    switch (f) {
        case Family::ADes: return Stat::Des;
        case Family::AExc: return Stat::Exc;
        case Family::BDes: return Stat::DesB;
        case Family::BExc: return Stat::ExcB;
        case Family::DDes: return Stat::DesD;
        case Family::DExc: return Stat::ExcB;
        case Family::BDesOverD:
        case Family::BDesOverBminusD: return Stat::DesB;
    }
    throw error("unknown family");
}

UniPoly invert_series(int n, const std::function<Int(int)>& rhs) {
    std::vector<Int> series(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) series[static_cast<size_t>(k)] = rhs(k);
    UniPoly product = UniPoly(std::move(series)) * one_minus_t_pow(n + 1);
    // Coefficients above degree n depend on the discarded series tail; the
    // exact ones are 0..n, which is all the polynomial has.
    std::vector<Int> trunc(static_cast<size_t>(n) + 1, Int(0));
    for (int k = 0; k <= n; ++k) trunc[static_cast<size_t>(k)] = product.coeff(k);
    return UniPoly(std::move(trunc));
}

UniPoly eulerian_a(int n) {
    if (n < 1) throw error("eulerian_a needs n >= 1");
    return invert_series(n, [n](int k) { return int_pow(k + 1, static_cast<unsigned long>(n)); });
}

UniPoly eulerian_b(int n) {
    if (n < 1) throw error("eulerian_b needs n >= 1");
    return invert_series(n, [n](int k) { return int_pow(2 * k + 1, static_cast<unsigned long>(n)); });
}

UniPoly eulerian_d(int n) {
    if (n < 1) throw error("eulerian_d needs n >= 1");
    if (n == 1) return UniPoly::constant(1);
    const Int factor = Int(n) << static_cast<unsigned>(n - 1); // n 2^(n-1)
    return eulerian_b(n) - (eulerian_a(n - 1).shifted(1) * factor);
}

UniPoly b_half_plus(int n) { return (eulerian_b(n) + one_minus_t_pow(n)).halved(); }

UniPoly b_half_minus(int n) { return (eulerian_b(n) - one_minus_t_pow(n)).halved(); }

UniPoly signed_gf(Family f, int n) {
    if (n < 1) throw error("signed_gf needs n >= 1");
    switch (f) {
        case Family::AExc:
            return one_minus_t_pow(n - 1);
        case Family::ADes:
            // (1-t)^floor(n/2) A_ceil(n/2): the reconstruction of the signed
            // descent sum over S_n from its product form.
            return one_minus_t_pow(n / 2) * eulerian_a((n + 1) / 2);
        case Family::BDes:
        case Family::BExc:
            return one_minus_t_pow(n);
        case Family::DDes:
            if (n == 1) return UniPoly::constant(1);
            if (n % 2 == 0) return one_minus_t_pow(n);
            return UniPoly({Int(1), Int(1)}) * one_minus_t_pow(n - 1);
        case Family::DExc:
            return one_minus_t_pow(n % 2 == 0 ? n : n - 1);
        case Family::BDesOverD:
        case Family::BDesOverBminusD:
            throw not_applicable_error(
                "the signed sum over this family is bivariate; use sgn_bdes_bivariate");
    }
    throw error("unknown family");
}

BiPoly sgn_bdes_bivariate(int n, Group ambient) {
    if (n < 1) throw error("sgn_bdes_bivariate needs n >= 1");
    if (ambient == Group::D) {
        if (n % 2 == 0) return BiPoly::s_minus_t_pow(n);
        return BiPoly::monomial(1, 0, 1) * BiPoly::s_minus_t_pow(n - 1);
    }
    if (ambient == Group::BminusD) {
        if (n % 2 == 0) return BiPoly();
        return BiPoly::monomial(0, 1, 1) * BiPoly::s_minus_t_pow(n - 1);
    }
    throw not_applicable_error("signed bivariate closed form exists over d and b-minus-d");
}

UniPoly unrestricted(Family f, int n) {
    if (n < 1) throw error("family polynomials need n >= 1");
    switch (f) {
        case Family::ADes:
        case Family::AExc: return eulerian_a(n);
        case Family::BDes:
        case Family::BExc: return eulerian_b(n);
        case Family::DDes: return eulerian_d(n);
        case Family::DExc:
        case Family::BDesOverD: return b_half_plus(n);
        case Family::BDesOverBminusD: return b_half_minus(n);
    }
    throw error("unknown family");
}

UniPoly restricted(Family f, int n, SignClass sign) {
    UniPoly all = unrestricted(f, n);
    if (sign == SignClass::All) return all;

    UniPoly sgn;
    switch (f) {
        case Family::BDesOverD:
        case Family::BDesOverBminusD:
            sgn = sgn_bdes_bivariate(n, family_group(f)).eval_s1();
            break;
        default:
            sgn = signed_gf(f, n);
            break;
    }

    UniPoly half = (sign == SignClass::Plus) ? (all + sgn) : (all - sgn);
    UniPoly out = half.halved();
    if (!out.all_coeffs_nonnegative())
        throw inconsistency_error("sign-class polynomial for " + std::string(family_id(f)) +
                                  " at n = " + std::to_string(n) +
                                  " has a negative coefficient: " + out.to_string());
    return out;
}

} // namespace weylstat
