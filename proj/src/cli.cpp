#include "expbasis/cli.hpp"

#include "expbasis/bounds.hpp"
#include "expbasis/errors.hpp"
#include "expbasis/gamma.hpp"
#include "expbasis/gram.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace expbasis::cli {

using Json = nlohmann::ordered_json;

namespace {

Json parseJson(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::size_t parseDimension(const Json& j) {
    const Json& d = field(j, "dimension");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) {
        throw Error(ErrorKind::Parse, "\"dimension\" must be a positive integer");
    }
    return d.get<std::size_t>();
}

Rational parseRationalValue(const Json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw Error(ErrorKind::Parse, "expected a rational string \"p/q\" or an integer, got " + v.dump());
}

Json jsonList(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json jsonStrings(std::span<const Scalar> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.toString());
    return a;
}

Json jsonCubes(const MultiRectangle& q) {
    Json a = Json::array();
    for (const auto& m : q.cubes()) a.push_back(m);
    return a;
}

Json jsonCheck(const CheckResult& c) {
    return Json{{"residual", c.residual}, {"bound", c.bound}, {"within_bound", c.withinBound}};
}

Json jsonSeq(const SparseSeq& s) {
    Json a = Json::array();
    for (const auto& [n, v] : s.entries()) a.push_back(Json{{"index", n}, {"re", v.real()}, {"im", v.imag()}});
    return a;
}

// Command-line option state shared by every subcommand.
struct Common {
    bool json = false;
    bool timings = false;
};

void addCommon(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "Machine-readable report on stdout");
    sub->add_flag("--timings", c.timings, "Include wall-clock timing in the report");
}

void render(const Json& report, bool asJson, std::ostream& out) {
    if (asJson) {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_object() ||
            (value.is_array() && std::any_of(value.begin(), value.end(), [](const Json& v) { return v.is_object(); }))) {
            out << key << ":\n";
            std::istringstream lines(value.dump(2));
            for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << key << ": " << value.dump() << '\n';
        }
    }
}

const ShiftFamily& requireShifts(const ProblemConfig& cfg) {
    if (!cfg.shifts) throw Error(ErrorKind::Parse, "the configuration has no \"shifts\"");
    return *cfg.shifts;
}

std::vector<double> parseDoubleList(const std::string& text) {
    std::vector<double> out;
    for (const auto& s : parseScalarList(text)) out.push_back(s.value());
    return out;
}

Json analyzeReport(const MultiRectangle& q, const ShiftFamily& s, double sigmaTol) {
    Json r;
    r["command"] = "analyze";
    r["dimension"] = q.dimension();
    r["cubes"] = q.size();
    r["shifts"] = s.size();
    r["shift_kind"] = scalarKindName(s.kind());
    if (s.size() != q.size()) {
        const auto a = analyzeRectangular(q, s, sigmaTol);
        r["label"] = RectangularAnalysis::label;
        r["is_frame"] = a.isFrame;
        r["is_riesz_sequence"] = a.isRieszSequence;
        r["is_basis"] = false;
        r["frame_bounds"] = Json::array({a.frameBounds.first, a.frameBounds.second});
        r["riesz_bounds"] = Json::array({a.rieszBounds.first, a.rieszBounds.second});
        r["threshold"] = a.threshold;
        return r;
    }
    AnalyzeOptions options;
    options.sigmaTol = sigmaTol;
    const auto a = analyze(q, s, options);
    r["method"] = scalarKindName(a.method);
    r["decided_by"] = a.decidedBy;
    r["is_basis"] = a.isBasis;
    r["lambda"] = a.lambda;
    r["Lambda"] = a.Lambda;
    r["condition"] = a.condition;
    r["det_abs2"] = a.detAbs2;
    r["eigenvalues_B"] = jsonList(a.singularValues);
    r["threshold"] = a.threshold;
    r["warnings"] = a.warnings;
    return r;
}

}  // namespace

ShiftVector parseScalarList(const std::string& text) {
    ShiftVector out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error(ErrorKind::Parse, "empty component in \"" + text + "\"");
        tok = tok.substr(b, e - b + 1);
        if (tok.find_first_of(".eEnN") != std::string::npos) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw Error(ErrorKind::Parse, "not a number: \"" + tok + "\"");
            out.emplace_back(v);
        } else {
            out.emplace_back(Rational::parse(tok));
        }
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "empty component list");
    return out;
}

ProblemConfig parseConfigText(const std::string& text) {
    const Json j = parseJson(text);
    const std::size_t d = parseDimension(j);
    const Json& cubesJ = field(j, "cubes");
    if (!cubesJ.is_array()) throw Error(ErrorKind::Parse, "\"cubes\" must be an array");
    std::vector<IntVector> cubes;
    for (const auto& c : cubesJ) {
        if (!c.is_array()) throw Error(ErrorKind::Parse, "each cube must be an integer array");
        IntVector m;
        for (const auto& v : c) {
            if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "cube coordinates must be integers");
            m.push_back(v.get<std::int64_t>());
        }
        cubes.push_back(std::move(m));
    }
    ProblemConfig cfg{MultiRectangle(d, std::move(cubes)), std::nullopt};
    if (j.contains("shifts")) {
        const Json& sj = j.at("shifts");
        if (!sj.is_array()) throw Error(ErrorKind::Parse, "\"shifts\" must be an array");
        std::vector<ShiftVector> shifts;
        for (const auto& row : sj) {
            if (!row.is_array()) throw Error(ErrorKind::Parse, "each shift must be an array");
            ShiftVector v;
            for (const auto& c : row) {
                if (c.is_string()) {
                    v.emplace_back(Rational::parse(c.get<std::string>()));
                } else if (c.is_number()) {
                    v.emplace_back(c.get<double>());
                } else {
                    throw Error(ErrorKind::Parse, "shift components must be \"p/q\" strings or numbers");
                }
            }
            if (v.size() != d) {
                throw Error(ErrorKind::DimensionMismatch, "shift of length " + std::to_string(v.size()) +
                                                              " in dimension " + std::to_string(d));
            }
            shifts.push_back(std::move(v));
        }
        cfg.shifts = ShiftFamily(d, std::move(shifts));
    }
    return cfg;
}

SparseSeq parseSequenceText(const std::string& text) {
    const Json j = parseJson(text);
    SparseSeq s(parseDimension(j));
    for (const auto& e : field(j, "entries")) {
        IntVector n;
        for (const auto& v : field(e, "index")) {
            if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "sequence indices must be integers");
            n.push_back(v.get<std::int64_t>());
        }
        const double re = e.value("re", 0.0);
        const double im = e.value("im", 0.0);
        s.add(n, Complex(re, im));
    }
    return s;
}

RationalRectSet parseRectsText(const std::string& text) {
    const Json j = parseJson(text);
    RationalRectSet set;
    set.dimension = parseDimension(j);
    for (const auto& rect : field(j, "rects")) {
        std::vector<RationalInterval> box;
        for (const auto& iv : rect) {
            if (!iv.is_array() || iv.size() != 2) throw Error(ErrorKind::Parse, "each interval must be [lo, hi]");
            box.push_back({parseRationalValue(iv[0]), parseRationalValue(iv[1])});
        }
        set.rects.push_back(std::move(box));
    }
    return set;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exponential Riesz bases on unions of unit cubes", "expbasis"};
    app.require_subcommand(1);
    Common common;
    Json report;
    int exitCode = kExitOk;
    std::string failure;

    std::string cfgPath;
    double sigmaTol = kSigmaTol;
    bool strict = false;
    auto* analyzeCmd = app.add_subcommand("analyze", "Decide the basis property and report frame constants");
    analyzeCmd->add_option("config", cfgPath, "Problem configuration")->required();
    analyzeCmd->add_flag("--strict", strict, "Exit 1 when the system is not a basis");
    analyzeCmd->add_option("--sigma-tol", sigmaTol, "Relative singularity threshold");
    addCommon(analyzeCmd, common);

    std::string deltaText;
    auto* sdeltaCmd = app.add_subcommand("sdelta", "Progression family S(delta)");
    sdeltaCmd->add_option("config", cfgPath)->required();
    sdeltaCmd->add_option("--delta", deltaText, "Comma-separated components")->required();
    addCommon(sdeltaCmd, common);

    bool literal = false;
    auto* boundsCmd = app.add_subcommand("bounds", "Gershgorin envelope of the frame constants");
    boundsCmd->add_option("config", cfgPath)->required();
    boundsCmd->add_option("--delta", deltaText, "Use the S(delta) envelope");
    boundsCmd->add_flag("--literal", literal, "Also print the uncorrected min-radius envelope (not certified)");
    addCommon(boundsCmd, common);

    std::int64_t radius = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    auto* verifyCmd = app.add_subcommand("verify", "Audit frame bounds with finite Gram sections");
    verifyCmd->add_option("config", cfgPath)->required();
    verifyCmd->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
    verifyCmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    verifyCmd->add_option("--seed", seed)->required();
    addCommon(verifyCmd, common);

    std::string tText, sText, seqPath, seq2Path, stepsText;
    auto* hilbertCmd = app.add_subcommand("hilbert", "The operator family T_t on sequences");
    hilbertCmd->require_subcommand(1);
    auto* applyCmd = hilbertCmd->add_subcommand("apply", "Apply T_t on a window");
    auto* checkCmd = hilbertCmd->add_subcommand("check", "Audit isometry, group law and adjoint identities");
    for (auto* c : {applyCmd, checkCmd}) {
        c->add_option("--t", tText, "Comma-separated parameter vector")->required();
        c->add_option("--seq", seqPath, "Sequence file")->required();
        c->add_option("--radius", radius)->required()->check(CLI::PositiveNumber);
        addCommon(c, common);
    }
    checkCmd->add_option("--s", sText, "Second parameter for the group law");
    checkCmd->add_option("--seq2", seq2Path, "Second sequence for inner-product identities");
    checkCmd->add_option("--steps", stepsText, "Decreasing steps in (0, 1/2] for the generator check (d = 1)");

    auto* findCmd = app.add_subcommand("find-shift", "Diagonal shift 1/L extracting a basis");
    findCmd->add_option("config", cfgPath)->required();
    addCommon(findCmd, common);

    auto* sampleCmd = app.add_subcommand("sample", "Random shift tuples: count singular draws");
    sampleCmd->add_option("config", cfgPath)->required();
    sampleCmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    sampleCmd->add_option("--seed", seed)->required();
    addCommon(sampleCmd, common);

    std::string rectsPath;
    auto* normalizeCmd = app.add_subcommand("normalize", "Scale rational rectangles to unit cubes");
    normalizeCmd->add_option("--rects", rectsPath)->required();
    addCommon(normalizeCmd, common);

    std::int64_t L = 0;
    auto* complementCmd = app.add_subcommand("complement", "Complement duality in the box {0..L-1}^d");
    complementCmd->add_option("config", cfgPath)->required();
    complementCmd->add_option("--L", L)->required()->check(CLI::PositiveNumber);
    addCommon(complementCmd, common);

    std::vector<std::string> argvStore{"expbasis"};
    argvStore.insert(argvStore.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argvStore) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (analyzeCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            report = analyzeReport(cfg.cubes, requireShifts(cfg), sigmaTol);
            if (strict && !report["is_basis"].get<bool>()) exitCode = kExitNotBasis;
        } else if (sdeltaCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            const ShiftVector delta = parseScalarList(deltaText);
            const auto& q = cfg.cubes;
            const auto family = ShiftFamily::progression(delta, q.size());
            const auto a = analyze(q, family);
            const auto bt = buildBtilde(q, delta);
            report["command"] = "sdelta";
            report["delta"] = jsonStrings(delta);
            report["is_basis"] = sdeltaIsBasis(q, delta);
            report["orthogonal"] = isOrthogonalSdelta(q, delta);
            report["vandermonde_det_sq"] = vandermondeDetSq(q, delta);
            report["lambda"] = a.lambda;
            report["Lambda"] = a.Lambda;
            report["decided_by"] = a.decidedBy;
            Json warnings = Json::array();
            for (const auto& [p, r] : bt.flagged) {
                warnings.push_back("B-tilde entry (" + std::to_string(p) + "," + std::to_string(r) +
                                   ") replaced by its limit");
            }
            for (const auto& w : a.warnings) warnings.push_back(w);
            report["warnings"] = warnings;
        } else if (boundsCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            BoundsReport b;
            if (!deltaText.empty()) {
                b = envelopeSdelta(cfg.cubes, parseScalarList(deltaText));
            } else {
                b = envelope(cfg.cubes, requireShifts(cfg));
            }
            report["command"] = "bounds";
            report["variant"] = deltaText.empty() ? "radii" : "sdelta";
            report["r"] = jsonList(b.rVals);
            report["rho"] = jsonList(b.rhoVals);
            if (b.sVals) report["s"] = jsonList(*b.sVals);
            report["lower"] = b.lower;
            report["upper"] = b.upper;
            report["lambda"] = b.lambda;
            report["Lambda"] = b.Lambda;
            report["contained"] = b.contained;
            report["tight"] = b.tight;
            if (literal) {
                report["literal_lower"] = b.literalLower;
                report["literal_upper"] = b.literalUpper;
            }
            report["warnings"] = b.warnings;
            if (!b.contained) {
                exitCode = kExitNumerical;
                failure = "containment audit failed: [lambda, Lambda] is not inside the envelope";
            }
        } else if (verifyCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            const auto v = verifyFrameBounds(cfg.cubes, requireShifts(cfg), trials, radius, seed);
            report["command"] = "verify";
            report["radius"] = radius;
            report["trials"] = v.trials;
            report["seed"] = seed;
            report["lambda"] = v.lambda;
            report["Lambda"] = v.Lambda;
            report["min_quotient"] = v.minQuotient;
            report["max_quotient"] = v.maxQuotient;
            report["lower_margin"] = v.lowerMargin;
            report["upper_margin"] = v.upperMargin;
            report["section_extremes"] = Json::array({v.sectionMin, v.sectionMax});
            report["half_radius_extremes"] = Json::array({v.halfMin, v.halfMax});
            report["quotients_contained"] = v.quotientsContained;
            report["extremes_contained"] = v.extremesContained;
            report["monotone"] = v.monotone;
            report["passed"] = v.passed;
            if (!v.passed) {
                exitCode = kExitNumerical;
                failure = "frame-bound audit failed";
            }
        } else if (applyCmd->parsed()) {
            const auto a = parseSequenceText(readFile(seqPath));
            const auto t = parseDoubleList(tText);
            const auto r = applyTnd(t, a, radius);
            report["command"] = "hilbert apply";
            report["t"] = t;
            report["radius"] = radius;
            report["tail_bound"] = r.tailBound;
            report["l2_norm"] = r.seq.l2Norm();
            report["entries"] = jsonSeq(r.seq);
        } else if (checkCmd->parsed()) {
            const auto a = parseSequenceText(readFile(seqPath));
            const auto b = seq2Path.empty() ? a : parseSequenceText(readFile(seq2Path));
            const auto t = parseDoubleList(tText);
            report["command"] = "hilbert check";
            report["t"] = t;
            report["radius"] = radius;
            bool ok = true;
            const auto iso = checkIsometry(t, a, radius);
            report["isometry"] = jsonCheck(iso);
            ok = ok && iso.withinBound;
            if (!sText.empty()) {
                const auto s = parseDoubleList(sText);
                const auto g = checkGroupLaw(s, t, a, radius);
                report["s"] = s;
                report["group_law"] = jsonCheck(g);
                ok = ok && g.withinBound;
            }
            const auto adj = checkAdjoint(t, a, b, radius);
            report["adjoint"] = jsonCheck(adj.adjoint);
            report["unitarity"] = jsonCheck(adj.unitarity);
            report["doubled"] = jsonCheck(adj.doubled);
            ok = ok && adj.adjoint.withinBound && adj.unitarity.withinBound && adj.doubled.withinBound;
            if (!stepsText.empty()) {
                const auto steps = parseDoubleList(stepsText);
                const auto gen = checkGenerator(a, steps, radius);
                report["generator"] = Json{{"steps", gen.steps},
                                           {"windowed", gen.windowed},
                                           {"certified", gen.certified},
                                           {"order", gen.order},
                                           {"decreasing", gen.decreasing}};
            }
            report["all_within_bounds"] = ok;
            if (!ok) {
                exitCode = kExitNumerical;
                failure = "an operator identity exceeded its truncation bound";
            }
        } else if (findCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            const auto& q = cfg.cubes;
            const std::int64_t shiftL = findExtractionShift(q);
            const ShiftVector delta(q.dimension(), Scalar(Rational(1, shiftL)));
            report["command"] = "find-shift";
            report["L"] = shiftL;
            report["delta"] = jsonStrings(delta);
            report["is_basis"] = sdeltaIsBasis(q, delta);
            try {
                std::vector<Scalar> sigma;
                for (const auto& r : spectralShiftSolve(q)) sigma.emplace_back(r);
                report["spectral_shift"] = jsonStrings(sigma);
                report["spectral_orthogonal"] = isOrthogonalSdelta(q, sigma);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::MissingOrigin && e.kind() != ErrorKind::RankDeficient) throw;
                report["spectral_shift"] = nullptr;
                report["spectral_note"] = e.what();
            }
        } else if (sampleCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            const auto r = randomShiftSample(cfg.cubes, trials, seed);
            report["command"] = "sample";
            report["trials"] = r.trials;
            report["seed"] = seed;
            report["singular_count"] = r.singularCount;
            report["min_eig_min"] = r.minEigMin;
            report["min_det_abs2"] = r.minDetAbs2;
        } else if (normalizeCmd->parsed()) {
            const auto n = normalize(parseRectsText(readFile(rectsPath)));
            report["command"] = "normalize";
            report["scale"] = n.scale;
            report["volume_factor"] = n.volumeFactor;
            Json tr = Json::array();
            for (const auto& r : n.translation) tr.push_back(r.toString());
            report["translation"] = tr;
            report["N"] = n.target.size();
            report["cubes"] = jsonCubes(n.target);
            report["note"] = "frame constants on the input equal those on the cubes divided by volume_factor";
        } else if (complementCmd->parsed()) {
            const auto cfg = parseConfigText(readFile(cfgPath));
            const auto c = complementDualityCheck(cfg.cubes, L);
            report["command"] = "complement";
            report["L"] = L;
            report["left"] = c.left;
            report["right"] = c.right;
            report["holds"] = c.holds;
            report["complement_cubes"] = c.complementCubes;
            report["complement_shifts"] = c.complementShifts;
            report["warnings"] = c.warnings;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.isNumerical() ? kExitNumerical : kExitInput;
    } catch (const Json::exception& e) {
        err << "error: Parse: " << e.what() << '\n';
        return kExitInput;
    }
    if (common.timings) {
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - started;
        report["timing_ms"] = ms.count();
    }
    render(report, common.json, out);
    if (!failure.empty()) err << "error: " << failure << '\n';
    return exitCode;
}

}  // namespace expbasis::cli
