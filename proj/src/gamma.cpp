#include "expbasis/gamma.hpp"

#include "expbasis/eigen.hpp"
#include "expbasis/errors.hpp"
#include "exact_det.hpp"
#include "phases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace expbasis {

namespace {

void requireSquare(const MultiRectangle& q, const ShiftFamily& s) {
    if (s.size() != q.size()) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(s.size()) + " shifts for " +
                                                      std::to_string(q.size()) + " cubes; the square case needs J = N");
    }
}

ComplexMatrix gammaFrom(const detail::PhaseGrid& g) {
    ComplexMatrix m(g.shifts(), g.cubes());
    for (std::size_t j = 0; j < g.shifts(); ++j) {
        for (std::size_t p = 0; p < g.cubes(); ++p) m(j, p) = g.phase(j, p);
    }
    return m;
}

HermitianMatrix bFrom(const detail::PhaseGrid& g) {
    const std::size_t P = g.cubes();
    ComplexMatrix m(P, P);
    for (std::size_t p = 0; p < P; ++p) {
        m(p, p) = static_cast<double>(g.shifts());
        for (std::size_t r = p + 1; r < P; ++r) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < g.shifts(); ++j) acc += g.phaseDiff(j, r, j, p);
            m(p, r) = acc;
        }
    }
    return HermitianMatrix::fromUpper(m);
}

HermitianMatrix aFrom(const detail::PhaseGrid& g) {
    const std::size_t J = g.shifts();
    ComplexMatrix m(J, J);
    for (std::size_t i = 0; i < J; ++i) {
        m(i, i) = static_cast<double>(g.cubes());
        for (std::size_t k = i + 1; k < J; ++k) {
            Complex acc = 0.0;
            for (std::size_t p = 0; p < g.cubes(); ++p) acc += g.phaseDiff(i, p, k, p);
            m(i, k) = acc;
        }
    }
    return HermitianMatrix::fromUpper(m);
}

std::string formatDouble(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

bool hasEqualRows(const detail::PhaseGrid& g) {
    for (std::size_t j = 0; j < g.shifts(); ++j) {
        for (std::size_t k = j + 1; k < g.shifts(); ++k) {
            bool same = true;
            for (std::size_t p = 0; p < g.cubes() && same; ++p) same = g.exponent(j, p) == g.exponent(k, p);
            if (same) return true;
        }
    }
    return false;
}

bool hasEqualColumns(const detail::PhaseGrid& g) {
    for (std::size_t p = 0; p < g.cubes(); ++p) {
        for (std::size_t r = p + 1; r < g.cubes(); ++r) {
            bool same = true;
            for (std::size_t j = 0; j < g.shifts() && same; ++j) same = g.exponent(j, p) == g.exponent(j, r);
            if (same) return true;
        }
    }
    return false;
}

}  // namespace

ComplexMatrix buildGamma(const MultiRectangle& q, const ShiftFamily& s) {
    requireSquare(q, s);
    return gammaFrom(detail::PhaseGrid(q, s));
}

ComplexMatrix buildGammaRectangular(const MultiRectangle& q, const ShiftFamily& s) {
    return gammaFrom(detail::PhaseGrid(q, s));
}

HermitianMatrix buildB(const MultiRectangle& q, const ShiftFamily& s) {
    requireSquare(q, s);
    return bFrom(detail::PhaseGrid(q, s));
}

HermitianMatrix buildA(const MultiRectangle& q, const ShiftFamily& s) {
    requireSquare(q, s);
    return aFrom(detail::PhaseGrid(q, s));
}

bool isProgression(const ShiftFamily& s) {
    if (s.size() <= 1) return true;
    const ShiftVector delta = subtract(s[1], s[0]);
    for (std::size_t j = 2; j < s.size(); ++j) {
        const ShiftVector rel = subtract(s[j], s[0]);
        for (std::size_t k = 0; k < s.dimension(); ++k) {
            if (!(rel[k] - delta[k] * static_cast<std::int64_t>(j)).isInteger()) return false;
        }
    }
    return true;
}

BasisAnalysis analyze(const MultiRectangle& q, const ShiftFamily& s, const AnalyzeOptions& options) {
    requireSquare(q, s);
    const std::size_t N = q.size();
    const detail::PhaseGrid grid(q, s);

    BasisAnalysis out;
    out.gamma = gammaFrom(grid);
    auto eig = hermitianEigenvalues(bFrom(grid));
    for (auto& v : eig) v = std::max(v, 0.0);
    out.singularValues = eig;
    out.lambda = eig.front();
    out.Lambda = eig.back();
    out.detAbs2 = 1.0;
    for (double v : eig) out.detAbs2 *= v;
    out.threshold = options.sigmaTol * static_cast<double>(N);
    const bool floatingVerdict = out.lambda > out.threshold;

    bool decided = false;
    if (s.kind() == ScalarKind::Exact) {
        if (N == 1) {
            out.isBasis = true;
            out.decidedBy = "single-cube";
            decided = true;
        } else if (isProgression(s)) {
            out.isBasis = sdeltaIsBasis(q, subtract(s[1], s[0]));
            out.decidedBy = "sdelta-criterion";
            decided = true;
        } else if (grid.integral()) {
            if (hasEqualRows(grid)) {
                out.isBasis = false;
                out.decidedBy = "equal-rows";
                decided = true;
            } else if (hasEqualColumns(grid)) {
                out.isBasis = false;
                out.decidedBy = "equal-columns";
                decided = true;
            } else {
                std::vector<std::vector<std::uint64_t>> exps(N, std::vector<std::uint64_t>(N));
                for (std::size_t j = 0; j < N; ++j) {
                    for (std::size_t p = 0; p < N; ++p) exps[j][p] = grid.exponent(j, p);
                }
                const auto det = detail::rootOfUnityDeterminant(exps, grid.denominator(), options.exactBudget);
                if (det.verdict != detail::DetVerdict::Undecided) {
                    out.isBasis = det.verdict == detail::DetVerdict::Nonsingular;
                    out.decidedBy = "modular-determinant";
                    decided = true;
                } else {
                    out.warnings.push_back("exact decision unavailable (" + det.note +
                                           "); falling back to the floating threshold");
                }
            }
        } else {
            out.warnings.push_back(
                "exact decision unavailable (common denominator too large); falling back to the floating threshold");
        }
    }
    if (decided) {
        out.method = ScalarKind::Exact;
        if (out.isBasis != floatingVerdict) {
            out.warnings.push_back("exact verdict (" + std::string(out.isBasis ? "basis" : "not a basis") +
                                   ") disagrees with the floating threshold: min eigenvalue " +
                                   formatDouble(out.lambda) + " vs " + formatDouble(out.threshold));
        }
    } else {
        out.method = ScalarKind::Floating;
        out.isBasis = floatingVerdict;
        out.decidedBy = "eigenvalue-threshold";
    }
    out.condition = out.isBasis && out.lambda > 0.0 ? out.Lambda / out.lambda
                                                    : std::numeric_limits<double>::infinity();
    return out;
}

RectangularAnalysis analyzeRectangular(const MultiRectangle& q, const ShiftFamily& s, double sigmaTol) {
    if (s.size() == 0) throw Error(ErrorKind::InvalidArgument, "at least one shift is required");
    const detail::PhaseGrid grid(q, s);
    const auto frame = hermitianEigenvalues(bFrom(grid));
    const auto riesz = hermitianEigenvalues(aFrom(grid));
    RectangularAnalysis out;
    out.threshold = sigmaTol * static_cast<double>(std::max(s.size(), q.size()));
    out.frameBounds = {std::max(frame.front(), 0.0), frame.back()};
    out.rieszBounds = {std::max(riesz.front(), 0.0), riesz.back()};
    out.isFrame = frame.front() > out.threshold;
    out.isRieszSequence = riesz.front() > out.threshold;
    return out;
}

}  // namespace expbasis
