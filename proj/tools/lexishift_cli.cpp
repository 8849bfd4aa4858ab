// lexishift: exact classification of doubling-map open systems.
//
// Subcommands operate on a kneading pair (--alpha/--beta, written "pre(per)")
// or a rational hole (--a/--b). Results are JSON on stdout. Exit codes:
//   0 success, 1 mathematical error (JSON {"error","message"}), 2 usage error.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexishift/renorm.hpp"
#include "lexishift/scan.hpp"

using nlohmann::json;
using namespace lexishift;

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

struct PairArgs {
    std::string alpha, beta;  // sequence grammar "pre(per)"
    std::string a, b;         // rational endpoints "p/q"

    bool has_seq() const { return !alpha.empty() || !beta.empty(); }
    bool has_hole() const { return !a.empty() || !b.empty(); }

    void add_to(CLI::App* cmd, bool with_hole = true) {
        cmd->add_option("--alpha", alpha, "upper kneading sequence, e.g. \"(110)\"");
        cmd->add_option("--beta", beta, "lower kneading sequence, e.g. \"(001)\"");
        if (with_hole) {
            cmd->add_option("--a", a, "left hole endpoint as a rational, e.g. 1/3");
            cmd->add_option("--b", b, "right hole endpoint as a rational, e.g. 2/3");
        }
    }

    // Resolve to a kneading pair, reducing a hole when endpoints were given.
    std::pair<EPSeq, EPSeq> pair() const {
        if (has_seq()) {
            if (alpha.empty() || beta.empty())
                throw CLI::ValidationError("--alpha and --beta must be given together");
            return {parse_seq(alpha), parse_seq(beta)};
        }
        if (has_hole()) {
            if (a.empty() || b.empty())
                throw CLI::ValidationError("--a and --b must be given together");
            HolePair hp = hole_to_pair(parse_unit_rat(a), parse_unit_rat(b));
            if (!hp.has_pair)
                fail("Unsupported", "no symbolic reduction implemented for the hole (" +
                                        a + ", " + b + ")");
            return {hp.alpha, hp.beta};
        }
        throw CLI::ValidationError("provide --alpha/--beta or --a/--b");
    }
};

json ratios_json(const std::vector<Ratio>& rs) {
    json j = json::array();
    for (const Ratio& r : rs) j.push_back(r.str());
    return j;
}

json classification_json(const Classification& c) {
    json j;
    j["tag"] = c.tag;
    j["ie"] = ie_kind_str(c.ie.kind);
    j["ie_provenance"] = c.ie.provenance;
    j["witnesses"] = c.ie.witnesses;
    if (c.tag != "Extremal") {
        j["level"] = c.level;
        j["ratios"] = ratios_json(c.ratios);
        j["base_alpha"] = c.base_alpha.str();
        j["base_beta"] = c.base_beta.str();
        if (c.entropy.kappa) j["kappa"] = round12(*c.entropy.kappa);
        else j["kappa"] = nullptr;
        j["h_bits"] = round12(c.entropy.h_bits);
        j["dim"] = round12(c.entropy.dim);
    }
    if (c.renorm) {
        j["assoc"] = {{"omega", c.renorm->assoc.omega},
                      {"nu", c.renorm->assoc.nu},
                      {"alpha_blocks", c.renorm->alpha_blocks.str()},
                      {"beta_blocks", c.renorm->beta_blocks.str()},
                      {"alpha_pattern", block_pattern(c.renorm->alpha_blocks)},
                      {"beta_pattern", block_pattern(c.renorm->beta_blocks)}};
    }
    if (c.hofbauer) {
        j["hofbauer"] = {{"k", c.hofbauer->k},
                         {"mirrored", c.hofbauer->mirrored},
                         {"level", c.hofbauer->level},
                         {"ratios", ratios_json(c.hofbauer->ratios)}};
    }
    if (c.trivial_renorm) j["trivial_renorm"] = true;
    if (!c.hole_kind.empty()) j["hole_kind"] = c.hole_kind;
    if (c.beta_value) j["beta_value"] = round12(*c.beta_value);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

void emit(const json& j, bool compact) {
    std::cout << (compact ? j.dump() : j.dump(2)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of doubling-map open systems"};
    app.require_subcommand(1);
    bool compact = false;
    app.add_flag("--json", compact, "print compact single-line JSON");

    PairArgs cls_args, ent_args, comp_args, meas_args;
    auto* cls = app.add_subcommand("classify", "full classification of a pair or hole");
    cls_args.add_to(cls);

    auto* ent = app.add_subcommand("entropy", "entropy and Hausdorff dimension");
    ent_args.add_to(ent);

    auto* comp = app.add_subcommand("components", "transitive component decomposition");
    comp_args.add_to(comp);

    auto* meas = app.add_subcommand("measure", "maximal-entropy Markov measure on a component");
    meas_args.add_to(meas);
    int meas_component = 0;
    meas->add_option("--component", meas_component, "component id (default 0 = maximal)");

    auto* bal = app.add_subcommand("balanced", "balanced words and window pair for a ratio");
    std::string bal_r;
    bal->add_option("--r", bal_r, "rotation ratio p/q in (0,1)")->required();

    auto* sub = app.add_subcommand("subst", "apply (or decode) the balanced substitution");
    std::string sub_r, sub_seq;
    bool sub_decode = false;
    sub->add_option("--r", sub_r, "rotation ratio p/q in (0,1)")->required();
    sub->add_option("--seq", sub_seq, "sequence \"pre(per)\"")->required();
    sub->add_flag("--decode", sub_decode, "decode into blocks instead of substituting");

    auto* exp = app.add_subcommand("expand", "binary expansion of a rational");
    std::string exp_x;
    std::size_t exp_n = 16;
    exp->add_option("--x", exp_x, "rational in [0,1]")->required();
    exp->add_option("--n", exp_n, "digits to print (default 16)");

    auto* box = app.add_subcommand("boxes", "renormalisation box geometry");
    std::string box_omega, box_nu, box_ratios, box_omega2, box_nu2;
    PairArgs box_args;
    box->add_option("--omega", box_omega, "window word omega")->required();
    box->add_option("--nu", box_nu, "window word nu")->required();
    box->add_option("--ratios", box_ratios, "substitution chain, e.g. \"1/2;1/3\"");
    box->add_option("--omega2", box_omega2, "second box: omega");
    box->add_option("--nu2", box_nu2, "second box: nu");
    box_args.add_to(box, false);

    auto* scan = app.add_subcommand("scan", "classify a rational grid, CSV output");
    ScanSpec scan_spec;
    std::string scan_out, sa_lo, sa_hi, sb_lo, sb_hi;
    scan->add_option("--denominator", scan_spec.denominator, "grid denominator D (default 64)");
    scan->add_option("--jobs", scan_spec.jobs, "worker threads (default 1)");
    scan->add_option("--out", scan_out, "write CSV to this file instead of stdout");
    scan->add_option("--a-lo", sa_lo, "rectangle: lower a bound (default 1/4)");
    scan->add_option("--a-hi", sa_hi, "rectangle: upper a bound (default 1/2)");
    scan->add_option("--b-lo", sb_lo, "rectangle: lower b bound (default 1/2)");
    scan->add_option("--b-hi", sb_hi, "rectangle: upper b bound (default 3/4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cls) {
            Classification c;
            if (cls_args.has_seq()) {
                auto [al, be] = cls_args.pair();
                c = classify(al, be);
            } else if (cls_args.has_hole()) {
                if (cls_args.a.empty() || cls_args.b.empty()) {
                    std::cerr << "--a and --b must be given together\n";
                    return 2;
                }
                c = classify(parse_unit_rat(cls_args.a), parse_unit_rat(cls_args.b));
            } else {
                std::cerr << "provide --alpha/--beta or --a/--b\n";
                return 2;
            }
            emit(classification_json(c), compact);
        } else if (*ent) {
            auto [al, be] = ent_args.pair();
            require_admissible(al, be);
            EntropyResult r = entropy_of(al, be);
            json j{{"alpha", al.str()}, {"beta", be.str()}};
            if (r.kappa) j["kappa"] = round12(*r.kappa);
            else j["kappa"] = nullptr;
            j["h_bits"] = round12(r.h_bits);
            j["dim"] = round12(r.dim);
            emit(j, compact);
        } else if (*comp) {
            auto [al, be] = comp_args.pair();
            Automaton a = build_automaton(al, be);
            auto reps = components(a);
            json list = json::array();
            for (const auto& r : reps) {
                list.push_back({{"id", r.id},
                                {"states", r.states.size()},
                                {"entropy_bits", round12(r.perron_entropy_bits)},
                                {"trivial_cycle", r.is_trivial_cycle},
                                {"entropy_lo", round12(r.entropy_lo)},
                                {"entropy_hi", round12(r.entropy_hi)}});
            }
            IEVerdict v = ie_from_components(reps, false);
            json j{{"alpha", al.str()},
                   {"beta", be.str()},
                   {"states", a.size()},
                   {"components", list},
                   {"ie", ie_kind_str(v.kind)},
                   {"witnesses", v.witnesses}};
            emit(j, compact);
        } else if (*meas) {
            auto [al, be] = meas_args.pair();
            Automaton a = build_automaton(al, be);
            MaxEntropyMeasure m = parry_measure(a, meas_component);
            json edges = json::array();
            for (const auto& e : m.edges)
                edges.push_back({{"from", e.from},
                                 {"symbol", e.symbol},
                                 {"to", e.to},
                                 {"prob", round12(e.prob)}});
            json j{{"alpha", al.str()},
                   {"beta", be.str()},
                   {"component", meas_component},
                   {"states", m.states},
                   {"entropy_bits", round12(m.entropy_bits)},
                   {"stationary", json::array()},
                   {"edges", edges}};
            for (double p : m.stationary) j["stationary"].push_back(round12(p));
            emit(j, compact);
        } else if (*bal) {
            Ratio r = parse_ratio(bal_r);
            auto [xi, zeta] = sturmian_pair(r);
            auto words = enumerate_balanced(r);
            json j{{"r", r.str()},
                   {"xi", xi},
                   {"zeta", zeta},
                   {"count", words.size()},
                   {"words", words},
                   {"substitution", rho(r).str()}};
            emit(j, compact);
        } else if (*sub) {
            Ratio r = parse_ratio(sub_r);
            EPSeq x = parse_seq(sub_seq);
            Substitution s = rho(r);
            json j{{"r", r.str()}, {"input", x.str()}};
            if (sub_decode) {
                DecodeResult dr = decode(s, x);
                j["ok"] = dr.ok;
                if (dr.ok) {
                    j["blocks"] = dr.blocks.str();
                    j["pattern"] = block_pattern(dr.blocks);
                } else {
                    j["failure_pos"] = dr.failure_pos;
                }
            } else {
                j["image"] = substitute(s, x).str();
            }
            emit(j, compact);
        } else if (*exp) {
            Rat x = parse_unit_rat(exp_x);
            EPSeq e = expand(x);
            std::string digits;
            for (std::size_t i = 0; i < exp_n; ++i) digits += e.at(i);
            json j{{"x", rat_str(x)},
                   {"expansion", e.str()},
                   {"digits", digits},
                   {"projected", rat_str(project(e))}};
            emit(j, compact);
        } else if (*box) {
            std::vector<Ratio> chain;
            if (!box_ratios.empty()) {
                std::size_t pos = 0;
                while (pos <= box_ratios.size()) {
                    std::size_t semi = box_ratios.find(';', pos);
                    std::string tok = box_ratios.substr(
                        pos, semi == std::string::npos ? std::string::npos : semi - pos);
                    if (!tok.empty()) chain.push_back(parse_ratio(tok));
                    if (semi == std::string::npos) break;
                    pos = semi + 1;
                }
            }
            RenormBox b1{AssocPair(box_omega, box_nu), chain};
            auto corners = box_corners(b1);
            json j{{"omega", b1.base.omega},
                   {"nu", b1.base.nu},
                   {"ratios", ratios_json(b1.ratios)},
                   {"level", b1.level()},
                   {"corners",
                    {{"x_lo", corners[0].str()},
                     {"x_hi", corners[1].str()},
                     {"y_lo", corners[2].str()},
                     {"y_hi", corners[3].str()}}},
                   {"diameter_sq", rat_str(box_diameter_sq(b1))},
                   {"diameter", round12(box_diameter(b1))}};
            if (!box_omega2.empty() || !box_nu2.empty()) {
                RenormBox b2{AssocPair(box_omega2, box_nu2), chain};
                j["disjoint"] = boxes_disjoint(b1, b2);
            }
            if (box_args.has_seq()) {
                auto [al, be] = box_args.pair();
                j["contains"] = box_contains(b1, al, be);
            }
            emit(j, compact);
        } else if (*scan) {
            if (!sa_lo.empty()) scan_spec.a_lo = parse_unit_rat(sa_lo);
            if (!sa_hi.empty()) scan_spec.a_hi = parse_unit_rat(sa_hi);
            if (!sb_lo.empty()) scan_spec.b_lo = parse_unit_rat(sb_lo);
            if (!sb_hi.empty()) scan_spec.b_hi = parse_unit_rat(sb_hi);
            std::signal(SIGINT, on_sigint);
            ScanResult r = run_scan(scan_spec, &g_interrupted);
            if (scan_out.empty()) {
                std::cout << r.csv;
            } else {
                std::ofstream f(scan_out, std::ios::binary);
                if (!f) fail("DomainError", "cannot open output file " + scan_out);
                f << r.csv;
                json j{{"rows", r.rows},
                       {"out", scan_out},
                       {"truncated", r.truncated},
                       {"tags", r.tag_counts}};
                emit(j, compact);
            }
            if (r.truncated) return 1;
        }
    } catch (const lexi_error& e) {
        json err{{"error", e.code}, {"message", e.what()}};
        emit(err, compact);
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
