#include "fch/model.hpp"

#include "fch/bony.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fch {

std::string to_string(Form form) {
    switch (form) {
        case Form::direct_11: return "direct_11";
        case Form::nonlocal_31: return "nonlocal_31";
        case Form::simplified_32: return "simplified_32";
    }
    return "?";
}

Form parse_form(const std::string& name) {
    if (name == "direct_11" || name == "11") return Form::direct_11;
    if (name == "nonlocal_31" || name == "31") return Form::nonlocal_31;
    if (name == "simplified_32" || name == "32") return Form::simplified_32;
    throw std::invalid_argument("unknown form '" + name + "'");
}

namespace {

void validate(const SpectralField& u, const FchParams& params) {
    if (params.nu < 1.0) throw std::invalid_argument("fch rhs: requires nu >= 1");
    if (params.grid && !(*params.grid == u.grid()))
        throw std::invalid_argument("fch rhs: field grid does not match params grid");
}

} // namespace

SpectralField f1(const SpectralField& u) { return u + pointwise_product(u, u); }

SpectralField f2(const SpectralField& u, const SpectralField& w, double nu) {
    return commutator(u, w, nu);
}

SpectralField rhs_nonlocal(const SpectralField& u, const FchParams& params) {
    validate(u, params);
    SpectralField ux = derivative(u, 1);
    SpectralField uux = pointwise_product(u, ux);

    if (params.form == Form::nonlocal_31) {
        SpectralField comm = f2(u, ux, params.nu);
        SpectralField source = linear_combination({{0.4, &ux}, {0.4, &uux}, {0.25, &comm}});
        SpectralField smoothed = smoothing_inverse(source, params.nu, 1.25);
        return linear_combination({{-0.6, &ux}, {-0.6, &uux}, {-1.0, &smoothed}});
    }
    if (params.form == Form::simplified_32) {
        // P(D) = -(1 + Lambda^{2nu})^{-1}
        SpectralField pf1 = derivative(smoothing_inverse(f1(u), params.nu, 1.0), 1);
        SpectralField pf2 = smoothing_inverse(f2(u, ux, params.nu), params.nu, 1.0);
        return linear_combination({{-1.0, &ux}, {-1.0, &uux}, {-1.0, &pf1}, {-1.0, &pf2}});
    }
    throw std::invalid_argument("rhs_nonlocal: form must be nonlocal_31 or simplified_32");
}

SpectralField rhs_direct(const SpectralField& u, const FchParams& params) {
    validate(u, params);
    if (params.form != Form::direct_11)
        throw std::invalid_argument("rhs_direct: form must be direct_11");
    SpectralField ux = derivative(u, 1);
    SpectralField uux = pointwise_product(u, ux);
    SpectralField lux = fractional_laplacian(ux, params.nu);
    SpectralField luux = fractional_laplacian(uux, params.nu);
    SpectralField ulux = pointwise_product(u, lux);
    SpectralField bracket = linear_combination(
        {{1.0, &ux}, {1.0, &uux}, {0.75, &lux}, {0.5, &luux}, {0.25, &ulux}});
    return -1.0 * smoothing_inverse(bracket, params.nu, 1.25);
}

SpectralField rhs(const SpectralField& u, const FchParams& params) {
    return params.form == Form::direct_11 ? rhs_direct(u, params) : rhs_nonlocal(u, params);
}

TwoComponentState rhs_two_component(const TwoComponentState& state, double nu) {
    if (nu < 1.0) throw std::invalid_argument("rhs_two_component: requires nu >= 1");
    if (!(state.u1.grid() == state.u2.grid()))
        throw std::invalid_argument("rhs_two_component: components on different grids");
    const SpectralField& u1 = state.u1;
    const SpectralField& u2 = state.u2;

    SpectralField u1u2 = pointwise_product(u1, u2);
    SpectralField u1sq = pointwise_product(u1, u1);
    SpectralField pf1 = -1.0 * smoothing_inverse(f1(u1), nu, 1.0);    // P(D) f1
    SpectralField pf2 = -1.0 * smoothing_inverse(f2(u1, u2, nu), nu, 1.0);

    SpectralField dxu1sq = derivative(u1sq, 1);
    SpectralField dxpf1 = derivative(pf1, 1);
    SpectralField f_1 =
        linear_combination({{-1.0, &u2}, {-0.5, &dxu1sq}, {1.0, &dxpf1}, {1.0, &pf2}});

    SpectralField transport = derivative(u2 + u1u2, 1);
    SpectralField dx2pf1 = derivative(pf1, 2);
    SpectralField dxpf2 = derivative(pf2, 1);
    SpectralField f_2 =
        linear_combination({{-1.0, &transport}, {1.0, &dx2pf1}, {1.0, &dxpf2}});
    return {f_1, f_2};
}

double ch_reduction_check(const SpectralField& u) {
    FchParams params{1.0, Form::direct_11, u.grid_ptr()};
    SpectralField via_multiplier = rhs_direct(u, params);

    // Expanded local form at nu = 1; every term is a plain derivative.
    SpectralField ux = derivative(u, 1);
    SpectralField uxx = derivative(u, 2);
    SpectralField uxxx = derivative(u, 3);
    SpectralField uux = pointwise_product(u, ux);
    SpectralField uxuxx = pointwise_product(ux, uxx);
    SpectralField uuxxx = pointwise_product(u, uxxx);
    SpectralField bracket = linear_combination(
        {{-1.0, &ux}, {-1.0, &uux}, {0.75, &uxxx}, {1.5, &uxuxx}, {0.75, &uuxxx}});
    SpectralField via_expansion = smoothing_inverse(bracket, 1.0, 1.25);

    double ref = via_multiplier.l2_norm();
    if (ref == 0.0) return 0.0;
    return (via_multiplier - via_expansion).l2_norm() / ref;
}

} // namespace fch
