#include "expbasis/eigen.hpp"
#include "expbasis/errors.hpp"
#include "expbasis/gamma.hpp"
#include "expbasis/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace expbasis {

std::int64_t findExtractionShift(const MultiRectangle& q) {
    std::vector<std::int64_t> diag;
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (std::size_t r = p + 1; r < q.size(); ++r) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < q.dimension(); ++k) s = checked::add(s, checked::sub(q[p][k], q[r][k]));
            if (s == 0) {
                throw Error(ErrorKind::DegenerateDiagonal,
                            "cubes " + std::to_string(p) + " and " + std::to_string(r) +
                                " lie on a common anti-diagonal, so no diagonal shift 1/L works; "
                                "use random shifts instead (see the sample command)");
            }
            diag.push_back(s < 0 ? -s : s);
        }
    }
    // Terminates: any L above the largest |⟨M_p − M_q, 1⃗⟩| divides none of them.
    for (std::int64_t L = boundingExtent(q);; ++L) {
        if (std::none_of(diag.begin(), diag.end(), [L](std::int64_t s) { return s % L == 0; })) return L;
    }
}

std::vector<Rational> spectralShiftSolve(const MultiRectangle& q) {
    const std::size_t d = q.dimension();
    const std::size_t N = q.size();
    const IntVector origin(d, 0);
    std::size_t originAt = N;
    for (std::size_t p = 0; p < N; ++p) {
        if (q[p] == origin) originAt = p;
    }
    if (originAt == N) throw Error(ErrorKind::MissingOrigin, "spectral shift construction needs the cube at 0");

    // Augmented rows [M_j | j/N] for the non-origin cubes, in input order.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t p = 0; p < N; ++p) {
        if (p == originAt) continue;
        std::vector<Rational> row;
        for (std::size_t k = 0; k < d; ++k) row.emplace_back(q[p][k]);
        row.emplace_back(static_cast<std::int64_t>(rows.size() + 1), static_cast<std::int64_t>(N));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivotCol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].isZero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const Rational inv = Rational(1) / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].isZero()) continue;
            const Rational f = rows[i][c];
            for (std::size_t k = c; k <= d; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivotCol.push_back(c);
        ++r;
    }
    if (r < rows.size()) {
        throw Error(ErrorKind::RankDeficient, "the non-origin cubes are linearly dependent (rank " +
                                                  std::to_string(r) + " < " + std::to_string(rows.size()) + ")");
    }
    std::vector<Rational> sigma(d, Rational(0));
    for (std::size_t i = 0; i < r; ++i) sigma[pivotCol[i]] = rows[i][d];
    return sigma;
}

SampleResult randomShiftSample(const MultiRectangle& q, std::size_t trials, std::uint64_t seed,
                               const SampleOptions& options) {
    if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    const std::size_t N = q.size();
    const std::size_t d = q.dimension();
    SampleResult out;
    out.trials = trials;
    out.minEigMin = std::numeric_limits<double>::infinity();
    out.minDetAbs2 = std::numeric_limits<double>::infinity();
    const double threshold = options.sigmaTol * static_cast<double>(N);
    for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng(seed, t);
        std::vector<std::vector<double>> shifts(N, std::vector<double>(d));
        for (auto& s : shifts) {
            for (auto& c : s) c = rng.uniform();
        }
        if (options.forceEqualFirstTwo && N >= 2) shifts[1] = shifts[0];
        const auto eig = hermitianEigenvalues(buildB(q, ShiftFamily::fromDoubles(d, shifts)));
        double det = 1.0;
        for (double v : eig) det *= std::max(v, 0.0);
        out.minEigMin = std::min(out.minEigMin, eig.front());
        out.minDetAbs2 = std::min(out.minDetAbs2, det);
        if (eig.front() <= threshold) ++out.singularCount;
    }
    return out;
}

ComplementDuality complementDualityCheck(const MultiRectangle& q, std::int64_t L) {
    const std::size_t d = q.dimension();
    if (L < 1) throw Error(ErrorKind::InvalidArgument, "L must be positive");
    ComplementDuality out;
    if (L < boundingExtent(q)) {
        out.warnings.push_back("L = " + std::to_string(L) + " is below the bounding extent " +
                               std::to_string(boundingExtent(q)));
    }
    for (const auto& m : q.cubes()) {
        if (std::any_of(m.begin(), m.end(), [L](std::int64_t v) { return v < 0 || v >= L; })) {
            out.warnings.push_back("cubes outside the box {0..L-1}^d are ignored on the complement side");
            break;
        }
    }

    const ShiftVector diagonal(d, Scalar(Rational(1, L)));
    out.left = sdeltaIsBasis(q, diagonal);

    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) {
        if (total > (std::size_t{1} << 12) / static_cast<std::size_t>(L)) {
            throw Error(ErrorKind::InvalidArgument, "L^d is too large for the complement check");
        }
        total *= static_cast<std::size_t>(L);
    }
    const std::size_t N = q.size();
    std::vector<IntVector> cubes;
    std::vector<ShiftVector> shifts;
    IntVector j(d, 0);
    for (std::size_t n = 0; n < total; ++n) {
        if (!q.contains(j)) cubes.push_back(j);
        const bool onDiagonal =
            std::all_of(j.begin(), j.end(), [&](std::int64_t v) { return v == j[0]; }) &&
            j[0] < static_cast<std::int64_t>(N);
        if (!onDiagonal) {
            ShiftVector s;
            for (auto v : j) s.emplace_back(Rational(v, L));
            shifts.push_back(std::move(s));
        }
        for (std::size_t k = d; k-- > 0;) {
            if (++j[k] < L) break;
            j[k] = 0;
        }
    }
    out.complementCubes = cubes.size();
    out.complementShifts = shifts.size();
    if (cubes.empty() || shifts.empty()) {
        // An empty system is a Riesz basis of the zero space only.
        out.right = cubes.empty() && shifts.empty();
    } else {
        const auto rect = analyzeRectangular(MultiRectangle(d, cubes), ShiftFamily(d, shifts));
        out.right = rect.isFrame && rect.isRieszSequence;
    }
    out.holds = out.left == out.right;
    return out;
}

}  // namespace expbasis
