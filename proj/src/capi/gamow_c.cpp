// C boundary for the library.  Each entry point validates its pointers,
// forwards to the C++ core, and converts thrown Error values into status
// codes plus a thread-local message.  No exception escapes.
#include "gamow/gamow.h"

#include <cstring>
#include <exception>
#include <string>

#include "core/bounds.hpp"
#include "core/evolution.hpp"
#include "core/hardy.hpp"
#include "core/serialize.hpp"
#include "core/shell.hpp"
#include "core/transform.hpp"

struct gamow_sampled {
    gamow::SampledFunction fn;
};

struct gamow_plan {
    gamow::TransformPlan plan;
};

namespace {

thread_local std::string tlError;

gamow_status status_from(gamow::Errc c) {
    using gamow::Errc;
    switch (c) {
        case Errc::InvalidArgument: return GAMOW_ERR_INVALID_ARGUMENT;
        case Errc::DegenerateThreshold: return GAMOW_ERR_DEGENERATE_THRESHOLD;
        case Errc::SingularMatrix: return GAMOW_ERR_SINGULAR_MATRIX;
        case Errc::PoleEncountered: return GAMOW_ERR_POLE_ENCOUNTERED;
        case Errc::Divergent: return GAMOW_ERR_DIVERGENT;
        case Errc::TailDominated: return GAMOW_ERR_TAIL_DOMINATED;
        case Errc::NotConverged: return GAMOW_ERR_NOT_CONVERGED;
        case Errc::Precondition: return GAMOW_ERR_PRECONDITION;
        case Errc::ParseFailure: return GAMOW_ERR_PARSE;
    }
    return GAMOW_ERR_INTERNAL;
}

template <class Body>
gamow_status guarded(Body&& body) {
    try {
        body();
        return GAMOW_OK;
    } catch (const gamow::Error& e) {
        tlError = e.what();
        return status_from(e.code);
    } catch (const std::exception& e) {
        tlError = e.what();
        return GAMOW_ERR_INTERNAL;
    } catch (...) {
        tlError = "unidentified failure crossing the C boundary";
        return GAMOW_ERR_INTERNAL;
    }
}

void require(const void* p, const char* name) {
    if (p == nullptr) gamow::fail(gamow::Errc::InvalidArgument, std::string(name) + " is null");
}

char* alloc_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gamow::PotentialSpec pot_from(const gamow_potential* pot) {
    require(pot, "potential");
    return {pot->a, pot->b, pot->v0};
}

gamow::DomainTag tag_from(gamow_domain d) {
    switch (d) {
        case GAMOW_DOMAIN_TIME: return gamow::DomainTag::TimeLine;
        case GAMOW_DOMAIN_ENERGY: return gamow::DomainTag::EnergyLine;
        case GAMOW_DOMAIN_ENERGY_HALFLINE: return gamow::DomainTag::PositiveEnergyHalfline;
        case GAMOW_DOMAIN_POSITION: return gamow::DomainTag::PositionLine;
    }
    gamow::fail(gamow::Errc::InvalidArgument, "unknown domain tag");
}

gamow_domain domain_from(gamow::DomainTag t) {
    switch (t) {
        case gamow::DomainTag::TimeLine: return GAMOW_DOMAIN_TIME;
        case gamow::DomainTag::EnergyLine: return GAMOW_DOMAIN_ENERGY;
        case gamow::DomainTag::PositiveEnergyHalfline: return GAMOW_DOMAIN_ENERGY_HALFLINE;
        case gamow::DomainTag::PositionLine: return GAMOW_DOMAIN_POSITION;
    }
    return GAMOW_DOMAIN_TIME;
}

gamow::Sheet sheet_from(gamow_sheet s) {
    if (s == GAMOW_SHEET_FIRST) return gamow::Sheet::First;
    if (s == GAMOW_SHEET_SECOND) return gamow::Sheet::Second;
    gamow::fail(gamow::Errc::InvalidArgument, "sheet must be 1 (first) or 2 (second)");
}

gamow::GamowPole pole_from(const gamow_pole* p) {
    require(p, "pole");
    return {{p->k_re, p->k_im}, {p->z_re, p->z_im}, p->e_r, p->gamma};
}

gamow_sampled* wrap(gamow::SampledFunction&& fn) { return new gamow_sampled{std::move(fn)}; }

}  // namespace

extern "C" {

const char* gamow_version(void) { return GAMOW_VERSION_STRING; }

const char* gamow_last_error(void) { return tlError.c_str(); }

void gamow_string_free(char* text) { delete[] text; }

/* ---- scattering ------------------------------------------------------- */

gamow_status gamow_smatrix(const gamow_potential* pot, double energy, double* s_re,
                           double* s_im) {
    return guarded([&] {
        require(s_re, "s_re");
        require(s_im, "s_im");
        const gamow::Complex s =
            gamow::s_matrix(pot_from(pot), gamow::Complex(energy, 0.0), gamow::Sheet::First);
        *s_re = s.real();
        *s_im = s.imag();
    });
}

gamow_status gamow_jost(const gamow_potential* pot, double k_re, double k_im, double* jm_re,
                        double* jm_im, double* jp_re, double* jp_im) {
    return guarded([&] {
        const gamow::JostData j =
            gamow::jost_function(pot_from(pot), gamow::Complex(k_re, k_im));
        if (jm_re) *jm_re = j.jMinus.real();
        if (jm_im) *jm_im = j.jMinus.imag();
        if (jp_re) *jp_re = j.jPlus.real();
        if (jp_im) *jp_im = j.jPlus.imag();
    });
}

gamow_status gamow_wavefunction(const gamow_potential* pot, double k_re, double k_im,
                                const double* r, size_t n, double* chi_re, double* chi_im,
                                double* dchi_re, double* dchi_im) {
    return guarded([&] {
        require(r, "r");
        const gamow::RegionSolution sol =
            gamow::match_coefficients(pot_from(pot), gamow::Complex(k_re, k_im));
        for (size_t i = 0; i < n; ++i) {
            if (chi_re || chi_im) {
                const gamow::Complex v = sol.eval(r[i]);
                if (chi_re) chi_re[i] = v.real();
                if (chi_im) chi_im[i] = v.imag();
            }
            if (dchi_re || dchi_im) {
                const gamow::Complex d = sol.evalDeriv(r[i]);
                if (dchi_re) dchi_re[i] = d.real();
                if (dchi_im) dchi_im[i] = d.imag();
            }
        }
    });
}

gamow_status gamow_find_poles(const gamow_potential* pot, double k_re_max, double k_im_min,
                              gamow_pole** poles, size_t* count, long* winding) {
    return guarded([&] {
        require(poles, "poles");
        require(count, "count");
        const gamow::PoleSearchReport report =
            gamow::find_poles_certified(pot_from(pot), 0.0, k_re_max, k_im_min, 0.0);
        gamow_pole* out = report.poles.empty() ? nullptr : new gamow_pole[report.poles.size()];
        for (size_t i = 0; i < report.poles.size(); ++i) {
            const gamow::GamowPole& p = report.poles[i];
            out[i] = {p.kPole.real(), p.kPole.imag(), p.zR.real(),
                      p.zR.imag(),    p.eR,           p.gamma};
        }
        *poles = out;
        *count = report.poles.size();
        if (winding) *winding = report.winding;
    });
}

void gamow_poles_free(gamow_pole* poles) { delete[] poles; }

gamow_status gamow_poles_to_json(const gamow_pole* poles, size_t count, char** json) {
    return guarded([&] {
        require(json, "json");
        if (count > 0) require(poles, "poles");
        std::vector<gamow::GamowPole> list;
        list.reserve(count);
        for (size_t i = 0; i < count; ++i) list.push_back(pole_from(&poles[i]));
        *json = alloc_string(gamow::to_json(list));
    });
}

/* ---- sampled functions ------------------------------------------------ */

gamow_status gamow_sampled_create(const double* grid, const double* re, const double* im,
                                  size_t n, gamow_domain domain, gamow_sampled** out) {
    return guarded([&] {
        require(grid, "grid");
        require(re, "re");
        require(im, "im");
        require(out, "out");
        gamow::SampledFunction fn;
        fn.tag = tag_from(domain);
        fn.grid.assign(grid, grid + n);
        fn.values.reserve(n);
        for (size_t i = 0; i < n; ++i) fn.values.emplace_back(re[i], im[i]);
        fn.validate();
        *out = wrap(std::move(fn));
    });
}

void gamow_sampled_destroy(gamow_sampled* f) { delete f; }

size_t gamow_sampled_size(const gamow_sampled* f) { return f ? f->fn.size() : 0; }

gamow_domain gamow_sampled_domain(const gamow_sampled* f) {
    return f ? domain_from(f->fn.tag) : GAMOW_DOMAIN_TIME;
}

gamow_status gamow_sampled_copy(const gamow_sampled* f, double* grid, double* re,
                                double* im) {
    return guarded([&] {
        require(f, "sampled function");
        for (size_t i = 0; i < f->fn.size(); ++i) {
            if (grid) grid[i] = f->fn.grid[i];
            if (re) re[i] = f->fn.values[i].real();
            if (im) im[i] = f->fn.values[i].imag();
        }
    });
}

gamow_status gamow_sampled_to_csv(const gamow_sampled* f, char** text) {
    return guarded([&] {
        require(f, "sampled function");
        require(text, "text");
        *text = alloc_string(gamow::to_csv(f->fn));
    });
}

gamow_status gamow_sampled_to_json(const gamow_sampled* f, char** text) {
    return guarded([&] {
        require(f, "sampled function");
        require(text, "text");
        *text = alloc_string(gamow::to_json(f->fn));
    });
}

gamow_status gamow_sampled_from_csv(const char* text, gamow_sampled** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(gamow::sampled_from_csv(text));
    });
}

gamow_status gamow_sampled_from_json(const char* text, gamow_sampled** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(gamow::sampled_from_json(text));
    });
}

gamow_status gamow_l2_norm_sq(const gamow_sampled* f, double* out) {
    return guarded([&] {
        require(f, "sampled function");
        require(out, "out");
        *out = gamow::l2_norm_sq(f->fn);
    });
}

/* ---- Hardy diagnostics ------------------------------------------------ */

gamow_status gamow_bump(double t0, double t1, int side, int degree, double freq,
                        const double* grid, size_t n, gamow_sampled** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        const gamow::BumpSpec spec{t0, t1, side, degree, freq};
        *out = wrap(gamow::make_bump(spec, std::vector<double>(grid, grid + n)));
    });
}

gamow_status gamow_fourier(const gamow_sampled* f, gamow_sampled** out) {
    return guarded([&] {
        require(f, "input");
        require(out, "out");
        *out = wrap(gamow::fourier_transform(f->fn));
    });
}

gamow_status gamow_is_hardy(const gamow_sampled* f, int plane, double tol, int* pass,
                            char** json_report) {
    return guarded([&] {
        require(f, "input");
        if (plane != 1 && plane != -1)
            gamow::fail(gamow::Errc::InvalidArgument, "plane must be +1 (upper) or -1 (lower)");
        const gamow::HardyReport report =
            gamow::is_hardy(f->fn, plane > 0 ? gamow::HalfPlane::Upper : gamow::HalfPlane::Lower,
                            gamow::default_y_samples(), tol == 0.0 ? 1e-6 : tol);
        if (pass) *pass = report.pass ? 1 : 0;
        if (json_report) *json_report = alloc_string(gamow::to_json(report));
    });
}

gamow_status gamow_restrict_positive(const gamow_sampled* fhat, gamow_sampled** out) {
    return guarded([&] {
        require(fhat, "input");
        require(out, "out");
        *out = wrap(gamow::restrict_positive(fhat->fn));
    });
}

/* ---- evolution --------------------------------------------------------- */

gamow_status gamow_evolve(const gamow_sampled* fhat, double t, int sign,
                          gamow_sampled** out) {
    return guarded([&] {
        require(fhat, "input");
        require(out, "out");
        *out = wrap(gamow::evolve(fhat->fn, t, sign));
    });
}

gamow_status gamow_semigroup(const gamow_sampled* fhat, int sign, const double* t, size_t nt,
                             double tol, char** json_report) {
    return guarded([&] {
        require(fhat, "input");
        require(t, "t");
        require(json_report, "json_report");
        const gamow::EvolutionReport report = gamow::semigroup_asymmetry(
            fhat->fn, sign, std::vector<double>(t, t + nt), gamow::default_y_samples(),
            tol == 0.0 ? 1e-6 : tol);
        *json_report = alloc_string(gamow::to_json(report));
    });
}

gamow_status gamow_decay_law(const gamow_pole* pole, const gamow_sampled* psi_hat,
                             const double* t, size_t nt, double* amp_re, double* amp_im) {
    return guarded([&] {
        require(psi_hat, "psi_hat");
        require(t, "t");
        require(amp_re, "amp_re");
        require(amp_im, "amp_im");
        const std::vector<gamow::Complex> amps =
            gamow::decay_law(pole_from(pole), psi_hat->fn, std::vector<double>(t, t + nt));
        for (size_t i = 0; i < amps.size(); ++i) {
            amp_re[i] = amps[i].real();
            amp_im[i] = amps[i].imag();
        }
    });
}

/* ---- spectral transform ------------------------------------------------ */

gamow_status gamow_plan_create(const gamow_potential* pot, int sign, double r_cutoff,
                               double e_cutoff, size_t r_points, size_t e_points,
                               gamow_plan** out) {
    return guarded([&] {
        require(out, "out");
        gamow::PlanOptions opts;
        if (r_cutoff != 0.0) opts.rCutoff = r_cutoff;
        if (e_cutoff != 0.0) opts.eCutoff = e_cutoff;
        if (r_points != 0) opts.rPoints = r_points;
        if (e_points != 0) opts.ePoints = e_points;
        *out = new gamow_plan{gamow::make_plan(pot_from(pot), sign, opts)};
    });
}

void gamow_plan_destroy(gamow_plan* plan) { delete plan; }

size_t gamow_plan_r_points(const gamow_plan* plan) {
    return plan ? plan->plan.rGrid.size() : 0;
}

size_t gamow_plan_e_points(const gamow_plan* plan) {
    return plan ? plan->plan.eGrid.size() : 0;
}

gamow_status gamow_plan_grids(const gamow_plan* plan, double* r_grid, double* e_grid) {
    return guarded([&] {
        require(plan, "plan");
        if (r_grid)
            std::memcpy(r_grid, plan->plan.rGrid.data(),
                        plan->plan.rGrid.size() * sizeof(double));
        if (e_grid)
            std::memcpy(e_grid, plan->plan.eGrid.data(),
                        plan->plan.eGrid.size() * sizeof(double));
    });
}

double gamow_plan_norm_constant(const gamow_plan* plan) {
    return plan ? plan->plan.normConstant : 0.0;
}

gamow_status gamow_to_energy(const gamow_plan* plan, const gamow_sampled* f,
                             gamow_sampled** out) {
    return guarded([&] {
        require(plan, "plan");
        require(f, "input");
        require(out, "out");
        *out = wrap(gamow::to_energy(plan->plan, f->fn));
    });
}

gamow_status gamow_to_position(const gamow_plan* plan, const gamow_sampled* g,
                               gamow_sampled** out) {
    return guarded([&] {
        require(plan, "plan");
        require(g, "input");
        require(out, "out");
        *out = wrap(gamow::to_position(plan->plan, g->fn));
    });
}

gamow_status gamow_moller_apply(const gamow_plan* plan, const gamow_sampled* f,
                                gamow_sampled** out) {
    return guarded([&] {
        require(plan, "plan");
        require(f, "input");
        require(out, "out");
        *out = wrap(gamow::moller_apply(plan->plan, f->fn));
    });
}

gamow_status gamow_norm_sq(const gamow_plan* plan, const gamow_sampled* f, double* out) {
    return guarded([&] {
        require(plan, "plan");
        require(f, "input");
        require(out, "out");
        if (f->fn.tag == gamow::DomainTag::PositiveEnergyHalfline)
            *out = gamow::energy_norm_sq(plan->plan, f->fn);
        else if (f->fn.tag == gamow::DomainTag::PositionLine)
            *out = gamow::l2_norm_sq(f->fn);
        else
            gamow::fail(gamow::Errc::InvalidArgument,
                        "norm under a plan needs position or positive-energy data");
    });
}

/* ---- bound audits ------------------------------------------------------ */

gamow_status gamow_kernel_bound_audit(const gamow_potential* pot, const double* z_re,
                                      const double* z_im, size_t nz, const double* r,
                                      size_t nr, gamow_sheet sheet, char** json,
                                      char** csv) {
    return guarded([&] {
        require(z_re, "z_re");
        require(z_im, "z_im");
        require(r, "r");
        std::vector<gamow::Complex> zGrid;
        zGrid.reserve(nz);
        for (size_t i = 0; i < nz; ++i) zGrid.emplace_back(z_re[i], z_im[i]);
        const gamow::BoundReport report = gamow::kernel_bound_audit(
            pot_from(pot), zGrid, std::vector<double>(r, r + nr), sheet_from(sheet));
        if (json) *json = alloc_string(gamow::to_json(report));
        if (csv) *csv = alloc_string(gamow::to_csv(report));
    });
}

gamow_status gamow_growth_profile(const gamow_potential* pot, gamow_profile_fn phi,
                                  void* ctx, double support_radius, double origin_re,
                                  double origin_im, double dir_re, double dir_im,
                                  gamow_sheet sheet, const double* s_values, size_t ns,
                                  char** json, char** csv) {
    return guarded([&] {
        require(reinterpret_cast<const void*>(phi), "phi");
        require(s_values, "s_values");
        gamow::RaySpec ray;
        ray.origin = {origin_re, origin_im};
        ray.direction = {dir_re, dir_im};
        ray.sheet = sheet_from(sheet);
        ray.sValues.assign(s_values, s_values + ns);
        const auto profile = [phi, ctx](double radius) {
            double re = 0.0, im = 0.0;
            phi(radius, ctx, &re, &im);
            return gamow::Complex(re, im);
        };
        const gamow::BoundReport report =
            gamow::wavefunction_growth_profile(pot_from(pot), profile, support_radius, ray);
        if (json) *json = alloc_string(gamow::to_json(report));
        if (csv) *csv = alloc_string(gamow::to_csv(report));
    });
}

} /* extern "C" */
