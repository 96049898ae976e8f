#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hncalc/envelope.hpp"
#include "hncalc/errors.hpp"

namespace {

enum class Format { Json, Table, AsciiPolygon };

Format parse_format(const std::string& name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "ascii-polygon") {
        return Format::AsciiPolygon;
    }
    return Format::Table;
}

std::string render(const hncalc::OutputEnvelope& env, Format format) {
    switch (format) {
    case Format::Json:
        return env.to_json_line() + "\n";
    case Format::AsciiPolygon:
        return env.to_ascii_polygon();
    case Format::Table:
        break;
    }
    return env.to_table();
}

// "lo..hi" or a single integer (meaning lo == hi).
bool parse_range(const std::string& text, long long& lo, long long& hi) {
    auto parse_ll = [](const std::string& part, long long& out) {
        try {
            std::size_t used = 0;
            out = std::stoll(part, &used);
            return used == part.size() && !part.empty();
        } catch (...) {
            return false;
        }
    };
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        if (!parse_ll(text, lo)) {
            return false;
        }
        hi = lo;
        return true;
    }
    return parse_ll(text.substr(0, pos), lo) && parse_ll(text.substr(pos + 2), hi);
}

int emit(const hncalc::OutputEnvelope& env, Format format) {
    std::cout << render(env, format);
    return env.all_checks_pass() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact splitting types and Harder-Narasimhan data of pushforward sheaves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "table", "ascii-polygon"}))
        ->capture_default_str();

    auto* splitting = app.add_subcommand(
        "splitting", "Splitting type of the projection pushforward of a complete intersection");
    int ci_n = 0;
    std::vector<long long> ci_degrees;
    splitting->add_option("-n,--dim", ci_n, "Ambient projective dimension")->required();
    splitting->add_option("-d,--degrees", ci_degrees, "Hypersurface degrees, comma separated")
        ->required()
        ->delimiter(',');

    auto* hn_sym = app.add_subcommand(
        "hn-sym", "HN polygon of a symmetric power of an unstable rank-2 bundle");
    int sym_m = 0;
    long long sym_s = 0, sym_t = 0;
    hn_sym->add_option("-m,--power", sym_m, "Symmetric power")->required();
    hn_sym->add_option("-s,--sub-degree", sym_s, "Degree of the destabilizing subbundle")->required();
    hn_sym->add_option("-t,--quotient-degree", sym_t, "Degree of the quotient line bundle")->required();

    auto* ruled = app.add_subcommand(
        "ruled", "HN data of the pushforward quotient for a divisor on a ruled surface");
    int ruled_n = 0;
    long long ruled_s = 0, ruled_t = 0, ruled_e = 0, ruled_alpha = 0;
    bool ruled_semistable = false;
    std::string ruled_char = "zero";
    ruled->add_option("-n,--fiber-degree", ruled_n, "Fiber degree of the divisor")->required();
    auto* opt_s = ruled->add_option("-s", ruled_s, "Destabilizing subbundle degree (unstable mode)");
    auto* opt_t = ruled->add_option("-t", ruled_t, "Quotient line bundle degree (unstable mode)");
    auto* opt_e = ruled->add_option("-e", ruled_e, "Degree of the rank-2 bundle (semistable mode)");
    ruled->add_option("-a,--alpha", ruled_alpha, "Degree of the twisting line bundle");
    ruled->add_flag("--semistable", ruled_semistable, "Treat the rank-2 bundle as semistable");
    ruled->add_option("--char", ruled_char, "Base field characteristic")
        ->check(CLI::IsMember({"zero", "positive"}))
        ->capture_default_str();

    auto* two_hyp = app.add_subcommand(
        "two-hyp", "Kernel presentation for an intersection of two hypersurfaces in a plane bundle");
    int th_n1 = 0, th_n2 = 0;
    long long th_a1 = 0, th_a2 = 0, th_e = 0;
    two_hyp->add_option("--n1", th_n1, "Fiber degree of the first hypersurface")->required();
    two_hyp->add_option("--n2", th_n2, "Fiber degree of the second hypersurface")->required();
    two_hyp->add_option("--a1", th_a1, "Twisting degree of the first hypersurface");
    two_hyp->add_option("--a2", th_a2, "Twisting degree of the second hypersurface");
    two_hyp->add_option("-e", th_e, "Degree of the rank-3 bundle");

    auto* acyclic = app.add_subcommand(
        "acyclic", "Pushforward of a cohomology-free bundle along a cover of the line");
    long long ac_cover = 0, ac_rank = 0, ac_deg = 0, ac_genus = 0;
    acyclic->add_option("-c,--cover", ac_cover, "Degree of the covering map")->required();
    acyclic->add_option("-r,--rank", ac_rank, "Rank of the bundle upstairs")->required();
    acyclic->add_option("--deg", ac_deg, "Degree of the bundle upstairs")->required();
    acyclic->add_option("-g,--genus", ac_genus, "Genus of the covering curve")->required();

    auto* sweep = app.add_subcommand(
        "sweep", "Batch splitting runs over a grid of (n, degrees)");
    std::string sweep_n, sweep_d;
    long long sweep_r = 1;
    unsigned sweep_threads = 0;
    sweep->add_option("--n", sweep_n, "Range of ambient dimensions, lo..hi or a single value")
        ->required();
    sweep->add_option("--r", sweep_r, "Number of degree coordinates")->capture_default_str();
    sweep->add_option("--d", sweep_d, "Range of each degree coordinate, lo..hi or a single value")
        ->required();
    sweep->add_option("--threads", sweep_threads, "Worker threads (0 = hardware)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }
    Format format = parse_format(format_name);

    try {
        if (splitting->parsed()) {
            hncalc::CompleteIntersectionSpec spec;
            spec.n = ci_n;
            spec.degrees = ci_degrees;
            return emit(hncalc::splitting_envelope(spec), format);
        }
        if (hn_sym->parsed()) {
            return emit(hncalc::hn_sym_envelope(sym_m, sym_s, sym_t), format);
        }
        if (ruled->parsed()) {
            hncalc::RuledSurfaceSpec spec;
            spec.n = ruled_n;
            spec.alpha = ruled_alpha;
            spec.characteristic = ruled_char == "positive" ? hncalc::Characteristic::Positive
                                                           : hncalc::Characteristic::Zero;
            if (ruled_semistable) {
                if (opt_e->count() == 0) {
                    std::cerr << "parse error: --semistable requires -e\n";
                    return 1;
                }
                spec.stability = hncalc::Stability::Semistable;
                spec.e = ruled_e;
            } else {
                if (opt_s->count() == 0 || opt_t->count() == 0) {
                    std::cerr << "parse error: unstable mode requires -s and -t\n";
                    return 1;
                }
                spec.stability = hncalc::Stability::Unstable;
                spec.s = ruled_s;
                spec.t = ruled_t;
            }
            return emit(hncalc::ruled_envelope(spec), format);
        }
        if (two_hyp->parsed()) {
            hncalc::TwoHypersurfaceSpec spec;
            spec.n1 = th_n1;
            spec.n2 = th_n2;
            spec.alpha1 = th_a1;
            spec.alpha2 = th_a2;
            spec.e = th_e;
            return emit(hncalc::two_hyp_envelope(spec), format);
        }
        if (acyclic->parsed()) {
            hncalc::AcyclicSpec spec;
            spec.cover_degree = ac_cover;
            spec.bundle_rank = ac_rank;
            spec.bundle_degree = ac_deg;
            spec.genus = ac_genus;
            return emit(hncalc::acyclic_envelope(spec), format);
        }
        if (sweep->parsed()) {
            hncalc::SweepConfig config;
            config.r = sweep_r;
            config.threads = sweep_threads;
            if (!parse_range(sweep_n, config.n_lo, config.n_hi) ||
                !parse_range(sweep_d, config.d_lo, config.d_hi)) {
                std::cerr << "parse error: ranges must be lo..hi or a single integer\n";
                return 1;
            }
            hncalc::SweepOutcome outcome = hncalc::run_sweep(config);
            for (const hncalc::OutputEnvelope& env : outcome.envelopes) {
                std::cout << render(env, format);
                if (format != Format::Json) {
                    std::cout << "\n";
                }
            }
            std::cerr << "sweep: " << outcome.envelopes.size() << " grid points, "
                      << outcome.pass_count << " passed, " << outcome.fail_count << " failed\n";
            return outcome.fail_count == 0 ? 0 : 3;
        }
    } catch (const hncalc::AdmissibilityError& e) {
        std::cerr << "admissibility error: " << e.what() << "\n";
        return 2;
    } catch (const hncalc::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 3;
    }
    std::cerr << "parse error: no subcommand given\n";
    return 1;
}
