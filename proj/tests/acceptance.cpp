// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sardex/verify/checks.hpp"

using namespace sardex;
using namespace sardex::verify;

namespace {

struct Outcome {
    bool ok = true;
    std::string summary;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string describe(const CheckResult& r)
{
    std::ostringstream os;
    os << r.name << ' ' << (r.passed ? "pass" : "fail") << " samples=" << r.samples << " worst=" << to_fixed(r.worst, 20, Rounding::up);
    if (!r.details.empty()) {
        os << " first=" << r.details.front().dump();
    }
    return os.str();
}

Outcome from_check(const CheckResult& r)
{
    return {r.passed, describe(r)};
}

bool run_criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    const bool in_time = elapsed < budget_s;
    const bool ok = out.ok && in_time;
    std::printf("criterion %2d: %s  %s [%.2f s of %.0f s]  %s\n", id, ok ? "PASS" : "FAIL", title.c_str(), elapsed, budget_s,
                out.summary.c_str());
    std::fflush(stdout);
    return ok;
}

/// Holder check with the tight-constant window [2^(1+alpha) - 1e-3, 4].
template <class T>
Outcome holder_outcome(const Params<T>& p, std::size_t samples)
{
    const CheckResult r = check_holder(p, samples, 42);
    const MpfrInterval sharp = MpfrInterval(Rational(2), 256).pow(1 + p.alpha());
    const Rational floor = sharp.lower_rational() - make_rational(1, 1000);
    Outcome out = from_check(r);
    out.ok = r.passed && r.worst <= 4 && r.worst >= floor;
    out.summary += " window=[" + to_fixed(floor, 6, Rounding::down) + ", 4]";
    return out;
}

template <class T>
Outcome family_outcome(const Params<T>& p)
{
    Outcome out;
    std::vector<CheckResult> results{check_gap_integral(p, 8), check_total_integral(p, 30)};
    const Outcome h = holder_outcome(p, 100000);
    results.push_back(check_c1(p, 10000, 42));
    results.push_back(check_image_gaps(p, 8));
    results.push_back(check_coverage(p, 1000, 30));
    out.ok = h.ok;
    for (const auto& r : results) {
        out.ok = out.ok && r.passed;
        if (!r.passed) {
            out.summary += describe(r) + "; ";
        }
    }
    out.summary += "alpha=" + to_string(p.alpha()) + " holder " + (h.ok ? "ok" : h.summary) + "; ";
    return out;
}

} // namespace

int main()
{
    const ExactParams p(Rational(1, 2), FieldOps<CubicNumber>{});
    bool all = true;

    all &= run_criterion(1, "gap integrals n<=8, exact closed form, quadrature 1e-6", 10, [&] { return from_check(check_gap_integral(p, 8)); });
    all &= run_criterion(2, "total integral f(M)=1 at D=30", 1, [&] {
        const CheckResult r = check_total_integral(p, 30);
        const Enclosure<CubicNumber> f = f_eval(p, p.M(), 30);
        Outcome out = from_check(r);
        out.ok = r.passed && f.lo == CubicNumber(1) && f.hi == CubicNumber(1);
        return out;
    });
    all &= run_criterion(3, "Hoelder |dg| <= 4|dx|^(1/2), 1e5 pairs", 60, [&] { return holder_outcome(p, 100000); });
    all &= run_criterion(4, "C1 remainder <= (8/3)h^(3/2), 1e4 pairs", 60, [&] { return from_check(check_c1(p, 10000, 42)); });
    all &= run_criterion(5, "f(J_n^k) = I_n^k exactly, n<=8", 10, [&] { return from_check(check_image_gaps(p, 8)); });
    all &= run_criterion(6, "critical-value coverage, 1001 grid points, D=30", 60, [&] { return from_check(check_coverage(p, 1000, 30)); });
    all &= run_criterion(7, "Steinhaus decomposition exact, 1e4 rationals", 30, [&] { return from_check(check_steinhaus(p, 10000, 42)); });
    all &= run_criterion(8, "partial gap sum tail <= (2/3)^D, 100 points", 10,
                         [&] { return from_check(check_partial_sums(p, 100, 42, {5, 10, 15})); });
    all &= run_criterion(9, "measure identity and bound, D<=25", 5, [&] { return from_check(check_measure(p, 25)); });
    all &= run_criterion(10, "criteria 1-6 at alpha in {1/4, 0.55} float(256); 0.59 rejected", 300, [&] {
        Outcome out;
        for (const Rational& alpha : {make_rational(1, 4), make_rational(11, 20)}) {
            const FloatParams q(alpha, FieldOps<MpfrInterval>{256});
            const Outcome o = family_outcome(q);
            out.ok = out.ok && o.ok;
            out.summary += o.summary;
        }
        try {
            params_new(make_rational(59, 100), Mode::floating, 256);
            out.ok = false;
            out.summary += "alpha=0.59 accepted";
        } catch (const ConstraintError&) {
            out.summary += "alpha=0.59 rejected";
        }
        return out;
    });

    std::printf("acceptance: %s\n", all ? "ALL PASS" : "FAILURES");
    return all ? 0 : 1;
}
