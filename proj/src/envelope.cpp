#include "hncalc/envelope.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <utility>

#include "hncalc/errors.hpp"

namespace hncalc {

namespace {

std::string join_ll(const std::vector<long long>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(values[i]);
    }
    return out;
}

Json int_list(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const Integer& v : values) {
        out.push_back(json_int(v));
    }
    return out;
}

Json rank_degree_json(const RankDegree& rd) {
    Json out;
    out["rank"] = json_int(rd.rank);
    out["degree"] = json_int(rd.degree);
    return out;
}

std::string pad_left(std::string s, std::size_t w) {
    if (s.size() < w) {
        s.insert(0, w - s.size(), ' ');
    }
    return s;
}

std::string pad_right(std::string s, std::size_t w) {
    if (s.size() < w) {
        s.append(w - s.size(), ' ');
    }
    return s;
}

// Scalars and flat arrays rendered for the human table; strings unquoted.
std::string inline_value(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += inline_value(v[i]);
        }
        return out;
    }
    return v.dump();
}

std::string polygon_table(const Json& poly) {
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"rank", "degree", "slope", "label"});
    for (const Json& piece : poly.at("pieces")) {
        std::string slope = piece.at("slope_numerator").dump() + "/" +
                            piece.at("slope_denominator").dump();
        rows.push_back({piece.at("rank").dump(), piece.at("degree").dump(),
                        std::move(slope), piece.at("label").get<std::string>()});
    }
    std::array<std::size_t, 3> width = {0, 0, 0};
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 3; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out = "  polygon:\n";
    for (const auto& row : rows) {
        out += "    ";
        for (std::size_t c = 0; c < 3; ++c) {
            out += pad_left(row[c], width[c]);
            out += "  ";
        }
        out += row[3];
        out += "\n";
    }
    return out;
}

std::string presentation_table(const Json& pres) {
    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"part", "rank", "degree"});
    auto add = [&rows](const std::string& name, const Json& rd) {
        rows.push_back({name, rd.at("rank").dump(), rd.at("degree").dump()});
    };
    add("source", pres.at("source"));
    for (const Json& t : pres.at("targets")) {
        add("target", t);
    }
    add("kernel", pres.at("kernel"));
    std::array<std::size_t, 3> width = {0, 0, 0};
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 3; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out = "  presentation:\n";
    for (const auto& row : rows) {
        out += "    ";
        out += pad_right(row[0], width[0]);
        out += "  ";
        out += pad_left(row[1], width[1]);
        out += "  ";
        out += pad_left(row[2], width[2]);
        out += "\n";
    }
    return out;
}

// den > 0; round half away from zero.
long long div_round(long long num, long long den) {
    if (num >= 0) {
        return (num + den / 2) / den;
    }
    return -((-num + den / 2) / den);
}

// Character plot of the cumulative (rank, degree) vertices, rank growing to
// the right, degree downward from the maximum. Empty string when the polygon
// is too large to draw sensibly.
std::string render_vertex_plot(const std::vector<std::pair<long long, long long>>& verts) {
    long long total_rank = verts.back().first;
    long long dmin = verts.front().second;
    long long dmax = dmin;
    for (const auto& v : verts) {
        dmin = std::min(dmin, v.second);
        dmax = std::max(dmax, v.second);
    }
    long long span = dmax - dmin;
    if (total_rank < 1 || total_rank > 600 || span > 100000) {
        return std::string();
    }
    long long x_step = std::clamp<long long>(48 / total_rank, 1, 6);
    long long y_div = std::max<long long>(1, (span + 23) / 24);
    std::size_t width = static_cast<std::size_t>(total_rank * x_step + 1);
    std::size_t height = static_cast<std::size_t>(div_round(span, y_div) + 1);
    std::vector<std::string> grid(height, std::string(width, ' '));

    auto col_of = [&](long long r) { return r * x_step; };
    auto row_of = [&](long long d) { return div_round(dmax - d, y_div); };

    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        long long c0 = col_of(verts[i].first), r0 = row_of(verts[i].second);
        long long c1 = col_of(verts[i + 1].first), r1 = row_of(verts[i + 1].second);
        long long steps = std::max({std::llabs(c1 - c0), std::llabs(r1 - r0), 1LL});
        for (long long k = 0; k <= steps; ++k) {
            long long c = c0 + div_round(k * (c1 - c0), steps);
            long long r = r0 + div_round(k * (r1 - r0), steps);
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '*';
        }
    }
    std::vector<std::pair<std::size_t, long long>> labels;
    for (const auto& v : verts) {
        auto r = static_cast<std::size_t>(row_of(v.second));
        grid[r][static_cast<std::size_t>(col_of(v.first))] = 'o';
        bool seen = false;
        for (const auto& l : labels) {
            seen = seen || l.first == r;
        }
        if (!seen) {
            labels.emplace_back(r, v.second);
        }
    }
    std::size_t margin = 0;
    for (const auto& l : labels) {
        margin = std::max(margin, std::to_string(l.second).size());
    }
    std::string out;
    for (std::size_t r = 0; r < height; ++r) {
        std::string label;
        for (const auto& l : labels) {
            if (l.first == r) {
                label = std::to_string(l.second);
                break;
            }
        }
        out += pad_left(label, margin);
        out += " |";
        std::string& line = grid[r];
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        if (!line.empty()) {
            out += " " + line;
        }
        out += "\n";
    }
    out += std::string(margin, ' ') + " +" + std::string(width + 1, '-') + "\n";
    std::string axis = "0";
    std::string right = std::to_string(total_rank);
    if (width >= axis.size() + right.size() + 1) {
        axis += std::string(width - right.size() - axis.size() + 1, ' ') + right;
    }
    out += std::string(margin, ' ') + "  " + axis + "  (rank)\n";
    return out;
}

Check make_check(std::string name, bool pass) {
    Check c;
    c.name = std::move(name);
    c.pass = pass;
    return c;
}

bool slopes_strictly_decreasing(const HNPolygon& polygon) {
    const auto& pieces = polygon.pieces();
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (compare_slopes(pieces[i], pieces[i + 1]) <= 0) {
            return false;
        }
    }
    return true;
}

} // namespace

std::int64_t json_int(const Integer& x) {
    if (!x.fits_slong_p()) {
        throw DomainError("value " + x.get_str() + " exceeds the 64-bit JSON integer range");
    }
    return static_cast<std::int64_t>(x.get_si());
}

Json polygon_to_json(const HNPolygon& polygon) {
    Json pieces = Json::array();
    for (const GradedPiece& piece : polygon.pieces()) {
        Rational slope(piece.degree, piece.rank);
        slope.canonicalize();
        Json entry;
        entry["rank"] = json_int(piece.rank);
        entry["degree"] = json_int(piece.degree);
        entry["slope_numerator"] = json_int(slope.get_num());
        entry["slope_denominator"] = json_int(slope.get_den());
        entry["label"] = piece.label;
        pieces.push_back(std::move(entry));
    }
    Json vertices = Json::array();
    for (const auto& [rank, degree] : polygon.vertices()) {
        vertices.push_back(Json::array({json_int(rank), json_int(degree)}));
    }
    Json out;
    out["pieces"] = std::move(pieces);
    out["vertices"] = std::move(vertices);
    return out;
}

bool OutputEnvelope::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json OutputEnvelope::to_json() const {
    Json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["result"] = result;
    Json list = Json::array();
    for (const Check& c : checks) {
        Json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        list.push_back(std::move(entry));
    }
    out["checks"] = std::move(list);
    return out;
}

std::string OutputEnvelope::to_json_line() const {
    return to_json().dump();
}

std::string OutputEnvelope::to_table() const {
    std::string out = "command: " + command + "\n";
    out += "inputs:\n";
    for (const auto& [key, value] : inputs.items()) {
        out += "  " + key + " = " + inline_value(value) + "\n";
    }
    out += "result:\n";
    for (const auto& [key, value] : result.items()) {
        if (key == "polygon") {
            out += polygon_table(value);
        } else if (key == "presentation") {
            out += presentation_table(value);
        } else {
            out += "  " + key + " = " + inline_value(value) + "\n";
        }
    }
    out += "checks:\n";
    std::size_t width = 0;
    for (const Check& c : checks) {
        width = std::max(width, c.name.size());
    }
    for (const Check& c : checks) {
        out += "  " + pad_right(c.name, width) + "  " + (c.pass ? "pass" : "FAIL") + "\n";
    }
    return out;
}

std::string OutputEnvelope::to_ascii_polygon() const {
    std::string out = command + "\n";
    if (result.contains("polygon")) {
        const Json& poly = result.at("polygon");
        std::vector<std::pair<long long, long long>> verts;
        for (const Json& v : poly.at("vertices")) {
            verts.emplace_back(v.at(0).get<long long>(), v.at(1).get<long long>());
        }
        std::string plot = render_vertex_plot(verts);
        if (!plot.empty()) {
            out += "\n" + plot;
        }
        out += "vertices:";
        for (const auto& [rank, degree] : verts) {
            out += " (" + std::to_string(rank) + "," + std::to_string(degree) + ")";
        }
        out += "\n";
    } else if (result.is_object() && result.value("zero_sheaf", false)) {
        out += "zero sheaf (no polygon)\n";
    } else {
        out += "no polygon in this result; use --format table or json\n";
    }
    if (!checks.empty()) {
        std::size_t passed = 0;
        for (const Check& c : checks) {
            passed += c.pass ? 1 : 0;
        }
        out += "checks: " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " passed";
        if (passed < checks.size()) {
            out += " (failed:";
            for (const Check& c : checks) {
                if (!c.pass) {
                    out += " " + c.name;
                }
            }
            out += ")";
        }
        out += "\n";
    }
    return out;
}

OutputEnvelope splitting_envelope(const CompleteIntersectionSpec& spec) {
    spec.validate();
    PushforwardDescription desc = pushforward_description(spec);
    const SplittingType& st = desc.splitting;

    bool three_route = st == splitting_product_oracle(spec.degrees);
    long window = st.max_degree_index() + spec.n;
    for (long m = 0; m <= window && three_route; ++m) {
        three_route = resubstitute(spec, st, m) == hilbert_oracle(spec, m);
    }

    Integer expected_rank(1);
    for (long long d : spec.degrees) {
        expected_rank *= to_integer(d);
    }
    bool rank_ok = st.total_rank() == expected_rank;

    bool chi_ok = euler_characteristic_on(st, spec.n - spec.codimension()) ==
                  hilbert_polynomial_constant(spec);

    long support = 0;
    for (long long d : spec.degrees) {
        support += static_cast<long>(d - 1);
    }
    bool palindrome = st.max_degree_index() == support;
    for (long j = 0; palindrome && j <= support; ++j) {
        palindrome = st.multiplicity(j) == st.multiplicity(support - j);
    }

    CompleteIntersectionSpec permuted = spec;
    std::sort(permuted.degrees.begin(), permuted.degrees.end(), std::greater<>());
    bool order_invariant = splitting_type(permuted) == st;

    OutputEnvelope env;
    env.command = "splitting -n " + std::to_string(spec.n) + " -d " + join_ll(spec.degrees, ",");
    env.inputs["n"] = spec.n;
    Json degrees = Json::array();
    for (long long d : spec.degrees) {
        degrees.push_back(d);
    }
    env.inputs["degrees"] = std::move(degrees);
    env.result["a"] = int_list(st.multiplicities());
    env.result["bundle"] = desc.bundle;
    env.result["polygon"] = polygon_to_json(desc.polygon);
    env.checks = {make_check("three-route", three_route), make_check("rank", rank_ok),
                  make_check("chi", chi_ok), make_check("palindrome", palindrome),
                  make_check("order-invariant", order_invariant)};
    return env;
}

OutputEnvelope hn_sym_envelope(int m, long long s, long long t) {
    HNPolygon polygon = sym_power_hn(m, s, t);

    bool piece_count = polygon.pieces().size() == static_cast<std::size_t>(m) + 1;
    bool ranks_one = true;
    for (const GradedPiece& piece : polygon.pieces()) {
        ranks_one = ranks_one && piece.rank == 1;
    }
    Integer expected_sum = binomial(m + 1, 2) * (to_integer(s) + to_integer(t));
    bool degree_sum = polygon.total_degree() == expected_sum;

    OutputEnvelope env;
    env.command = "hn-sym -m " + std::to_string(m) + " -s " + std::to_string(s) +
                  " -t " + std::to_string(t);
    env.inputs["m"] = m;
    env.inputs["s"] = s;
    env.inputs["t"] = t;
    env.result["polygon"] = polygon_to_json(polygon);
    env.checks = {make_check("piece-count", piece_count), make_check("ranks-all-one", ranks_one),
                  make_check("slopes-strictly-decreasing", slopes_strictly_decreasing(polygon)),
                  make_check("degree-sum", degree_sum)};
    return env;
}

OutputEnvelope ruled_envelope(const RuledSurfaceSpec& spec) {
    spec.validate();
    auto outcome = direct_image_quotient_hn(spec);

    OutputEnvelope env;
    env.command = "ruled -n " + std::to_string(spec.n);
    if (spec.stability == Stability::Semistable) {
        env.command += " --semistable -e " + std::to_string(spec.e);
    } else {
        env.command += " -s " + std::to_string(spec.s) + " -t " + std::to_string(spec.t);
    }
    env.command += " -a " + std::to_string(spec.alpha);
    if (spec.characteristic == Characteristic::Positive) {
        env.command += " --char positive";
    }

    env.inputs["n"] = spec.n;
    env.inputs["stability"] =
        spec.stability == Stability::Semistable ? "semistable" : "unstable";
    if (spec.stability == Stability::Semistable) {
        env.inputs["e"] = spec.e;
    } else {
        env.inputs["s"] = spec.s;
        env.inputs["t"] = spec.t;
    }
    env.inputs["alpha"] = spec.alpha;
    env.inputs["characteristic"] =
        spec.characteristic == Characteristic::Positive ? "positive" : "zero";

    if (std::holds_alternative<ZeroSheaf>(outcome)) {
        env.result["zero_sheaf"] = true;
        env.checks = {make_check("zero-sheaf", spec.n == 1)};
        return env;
    }
    const HNPolygon& polygon = std::get<HNPolygon>(outcome);
    env.result["zero_sheaf"] = false;
    env.result["polygon"] = polygon_to_json(polygon);

    Integer n1(spec.n - 1);
    if (spec.stability == Stability::Semistable) {
        bool piece_count = polygon.pieces().size() == 1;
        bool rank_ok = polygon.total_rank() == n1;
        Integer expected = -binomial(spec.n - 1, 2) * to_integer(spec.e) -
                           n1 * (to_integer(spec.alpha) + to_integer(spec.e));
        env.checks = {make_check("piece-count", piece_count), make_check("rank", rank_ok),
                      make_check("degree-sum", polygon.total_degree() == expected)};
        return env;
    }
    bool piece_count = polygon.pieces().size() == static_cast<std::size_t>(spec.n - 1);
    Integer st_sum = to_integer(spec.s) + to_integer(spec.t);
    Integer expected = -binomial(spec.n - 1, 2) * st_sum -
                       n1 * (to_integer(spec.alpha) + st_sum);
    bool degree_sum = polygon.total_degree() == expected;
    bool differences = true;
    const auto& pieces = polygon.pieces();
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        differences = differences &&
                      pieces[i].degree - pieces[i + 1].degree == to_integer(spec.s) - to_integer(spec.t);
    }
    env.checks = {make_check("piece-count", piece_count), make_check("degree-sum", degree_sum),
                  make_check("consecutive-differences", differences),
                  make_check("slopes-strictly-decreasing", slopes_strictly_decreasing(polygon))};
    return env;
}

OutputEnvelope two_hyp_envelope(const TwoHypersurfaceSpec& spec) {
    spec.validate();
    auto outcome = quotient_presentation(spec);

    OutputEnvelope env;
    env.command = "two-hyp --n1 " + std::to_string(spec.n1) + " --n2 " + std::to_string(spec.n2) +
                  " --a1 " + std::to_string(spec.alpha1) + " --a2 " + std::to_string(spec.alpha2) +
                  " -e " + std::to_string(spec.e);
    env.inputs["n1"] = spec.n1;
    env.inputs["n2"] = spec.n2;
    env.inputs["alpha1"] = spec.alpha1;
    env.inputs["alpha2"] = spec.alpha2;
    env.inputs["e"] = spec.e;

    if (std::holds_alternative<ZeroSheaf>(outcome)) {
        env.result["zero_sheaf"] = true;
        env.checks = {make_check("zero-sheaf", spec.n1 + spec.n2 < 3)};
        return env;
    }
    const KernelPresentation& pres = std::get<KernelPresentation>(outcome);
    env.result["zero_sheaf"] = false;
    Json pres_json;
    pres_json["source"] = rank_degree_json(pres.source);
    pres_json["targets"] =
        Json::array({rank_degree_json(pres.targets[0]), rank_degree_json(pres.targets[1])});
    pres_json["kernel"] = rank_degree_json(pres.kernel);
    env.result["presentation"] = std::move(pres_json);

    Integer expected_rank = Integer(spec.n1) * Integer(spec.n2) - 1;
    Integer by_binomials = binomial(spec.n1 + spec.n2 - 1, 2) - binomial(spec.n1 - 1, 2) -
                           binomial(spec.n2 - 1, 2);
    bool rank_identity = pres.kernel.rank == expected_rank && by_binomials == expected_rank;
    bool additivity =
        pres.source.rank == pres.targets[0].rank + pres.targets[1].rank + pres.kernel.rank &&
        pres.source.degree ==
            pres.targets[0].degree + pres.targets[1].degree + pres.kernel.degree;
    env.checks = {make_check("rank-identity", rank_identity),
                  make_check("euler-additivity", additivity)};
    return env;
}

OutputEnvelope acyclic_envelope(const AcyclicSpec& spec) {
    SplittingType st = pushforward_splitting(spec);
    HNPolygon polygon = polygon_from_splitting(st);

    bool chi_zero = euler_characteristic(st) == 0 &&
                    euler_char(spec.bundle_degree, spec.bundle_rank, spec.genus) == 0;
    bool single_block = polygon.pieces().size() == 1;
    bool slope_minus_one =
        single_block && polygon.pieces()[0].degree == -polygon.pieces()[0].rank;

    OutputEnvelope env;
    env.command = "acyclic -c " + std::to_string(spec.cover_degree) + " -r " +
                  std::to_string(spec.bundle_rank) + " --deg " +
                  std::to_string(spec.bundle_degree) + " -g " + std::to_string(spec.genus);
    env.inputs["cover_degree"] = spec.cover_degree;
    env.inputs["bundle_rank"] = spec.bundle_rank;
    env.inputs["bundle_degree"] = spec.bundle_degree;
    env.inputs["genus"] = spec.genus;
    env.result["a"] = int_list(st.multiplicities());
    env.result["bundle"] = bundle_string(st);
    env.result["polygon"] = polygon_to_json(polygon);
    env.checks = {make_check("chi-zero", chi_zero), make_check("single-block", single_block),
                  make_check("slope-minus-one", slope_minus_one)};
    return env;
}

SweepOutcome run_sweep(const SweepConfig& config) {
    if (config.r < 1) {
        throw DomainError("sweep needs at least one degree coordinate");
    }
    if (config.r > 8) {
        throw DomainError("sweep supports at most 8 degree coordinates");
    }
    SweepOutcome outcome;
    bool empty = config.n_lo > config.n_hi || config.d_lo > config.d_hi;
    if (empty) {
        return outcome;
    }
    if (config.d_lo < 1) {
        throw DomainError("sweep degrees must be at least 1");
    }
    if (config.n_lo - config.r < 1) {
        throw DomainError("sweep needs n - r >= 1 for every n in range; raise the lower n bound");
    }
    if (config.n_hi > 1000000 || config.d_hi > 1000000) {
        throw DomainError("sweep bounds are limited to 1000000");
    }

    unsigned long long d_count = static_cast<unsigned long long>(config.d_hi - config.d_lo + 1);
    unsigned long long total = static_cast<unsigned long long>(config.n_hi - config.n_lo + 1);
    for (long long i = 0; i < config.r; ++i) {
        total *= d_count; // bounded: both factors stay within checked limits below
        if (total > 200000) {
            throw DomainError("sweep grid exceeds 200000 points");
        }
    }

    std::vector<CompleteIntersectionSpec> grid;
    grid.reserve(static_cast<std::size_t>(total));
    for (long long n = config.n_lo; n <= config.n_hi; ++n) {
        std::vector<long long> degrees(static_cast<std::size_t>(config.r), config.d_lo);
        while (true) {
            CompleteIntersectionSpec spec;
            spec.n = static_cast<int>(n);
            spec.degrees = degrees;
            grid.push_back(std::move(spec));
            std::size_t pos = degrees.size();
            while (pos > 0 && degrees[pos - 1] == config.d_hi) {
                degrees[pos - 1] = config.d_lo;
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++degrees[pos - 1];
        }
    }

    outcome.envelopes.resize(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= grid.size()) {
                return;
            }
            try {
                outcome.envelopes[i] = splitting_envelope(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned requested = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    std::size_t thread_count = std::clamp<std::size_t>(requested, 1, grid.size());
    if (thread_count > 1) {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    } else {
        worker();
    }
    for (const std::exception_ptr& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    for (const OutputEnvelope& env : outcome.envelopes) {
        if (env.all_checks_pass()) {
            ++outcome.pass_count;
        } else {
            ++outcome.fail_count;
        }
    }
    return outcome;
}

} // namespace hncalc
