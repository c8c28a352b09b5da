#include "virtua/session.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "virtua/limits.hpp"

#ifdef VIRTUA_HAVE_OPENMP
#include <omp.h>
#endif

namespace virtua {

using nlohmann::json;

namespace {

struct RawArgs {
    std::string ring_path;
    std::string complex_path;
    std::string ideal_path;
    std::string presentation_path;
    std::string by_ideal_path;
    std::string degree_text;
    std::string by_text = "B";
    int index = 1;
    int maxlen = 0;
    int fitting_j = -1;
    bool oracle = false;
    bool as_json = false;
    bool saturate_flag = false;
    bool serial = false;
    int threads = 0;
    std::uint64_t seed = kDefaultSeed;
    double max_seconds = 0;
};

void add_common(CLI::App* sub, RawArgs& raw) {
    sub->add_option("--ring", raw.ring_path, "ring descriptor JSON");
    sub->add_option("--seed", raw.seed, "session seed for randomized paths");
    sub->add_option("--max-seconds", raw.max_seconds, "wall-clock budget");
    sub->add_flag("--json", raw.as_json, "machine-readable report");
    sub->add_flag("--serial", raw.serial, "run kernels on the serial reference path");
    sub->add_option("--threads", raw.threads, "kernel thread count");
}

RingPtr need_ring(const RawArgs& raw) {
    if (raw.ring_path.empty()) throw InputError("--ring is required");
    RingPtr ring = ring_from_json_file(raw.ring_path);
    if (ring->nvars() > compute_limits().max_vars)
        throw ResourceLimitError("ring has " + std::to_string(ring->nvars()) +
                                 " variables, cap is " +
                                 std::to_string(compute_limits().max_vars));
    return ring;
}

json betti_json(const FreeComplex& F) {
    json out = json::array();
    for (const auto& m : F.modules) out.push_back(m.rank());
    return out;
}

void print_complex_text(std::ostream& out, const FreeComplex& F) {
    for (std::size_t i = 0; i < F.modules.size(); ++i) {
        out << "F_" << i << " rank " << F.modules[i].rank() << " twists";
        for (const auto& t : F.modules[i].twists) out << " " << t.str();
        out << "\n";
    }
}

std::string complex_report_json(const char* command, const FreeComplex& F,
                                std::uint64_t seed) {
    json j = json::parse(complex_to_json_text(F));
    j["schema"] = "virtua/1";
    j["command"] = command;
    j["seed"] = seed;
    j["betti"] = betti_json(F);
    return j.dump(2);
}

int cmd_check(const Session& s, std::ostream& out) {
    IrrelevantIdeal B = irrelevant_components(*s.ring);
    VirtualityReport report = check_virtual(*s.complex_chain, B, s.seed);
    std::vector<TorsionCertificate> certs;
    if (s.want_oracle) {
        auto [verdict, cs] = oracle_is_virtual(*s.complex_chain, B, s.seed);
        report.verdict_oracle = verdict;
        certs = std::move(cs);
    }
    const auto* cert_ptr = s.want_oracle ? &certs : nullptr;
    out << (s.want_json ? check_report_to_json(report, cert_ptr)
                        : check_report_to_text(report, cert_ptr));
    if (s.want_json) out << "\n";
    return report.verdict_theorem ? 0 : 1;
}

int cmd_mfr(const Session& s, std::ostream& out) {
    Presentation P = presentation_of_quotient(*s.ideal);
    int maxlen = s.maxlen > 0 ? s.maxlen : s.ring->nvars() + 1;
    FreeComplex R = minimal_free_resolution(P, maxlen);
    if (s.want_json) {
        out << complex_report_json("mfr", R, s.seed) << "\n";
    } else {
        out << "seed " << s.seed << "\n";
        print_complex_text(out, R);
    }
    return 0;
}

int cmd_vres_pair(const Session& s, std::ostream& out) {
    FreeComplex R;
    if (s.complex_chain) {
        R = *s.complex_chain;
    } else {
        Presentation P = presentation_of_quotient(*s.ideal);
        R = minimal_free_resolution(P, s.maxlen > 0 ? s.maxlen : s.ring->nvars() + 1);
    }
    FreeComplex T = vres_of_pair(R, *s.degree);
    if (s.want_json) {
        out << complex_report_json("vres-pair", T, s.seed) << "\n";
    } else {
        out << "seed " << s.seed << "\n";
        print_complex_text(out, T);
    }
    return 0;
}

int cmd_saturate(const Session& s, std::ostream& out) {
    Ideal result = s.by_ideal ? saturate(*s.ideal, *s.by_ideal)
                              : saturate_by_irrelevant(*s.ideal,
                                                       irrelevant_components(*s.ring));
    if (s.want_json) {
        json j;
        j["schema"] = "virtua/1";
        j["command"] = "saturate";
        j["generators"] = ideal_strings(result);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& g : ideal_strings(result)) out << g << "\n";
        if (result.is_zero()) out << "0\n";
    }
    return 0;
}

int cmd_depth(const Session& s, std::ostream& out) {
    Ideal I = *s.ideal;
    if (s.want_saturate)
        I = saturate_by_irrelevant(I, irrelevant_components(*s.ring));
    ExtInt d = grade(I);
    if (s.want_json) {
        json j;
        j["schema"] = "virtua/1";
        j["command"] = "depth";
        j["saturated"] = s.want_saturate;
        j["depth"] = d.is_infinite() ? json("inf") : json(d.value());
        out << j.dump(2) << "\n";
    } else {
        out << d.str() << "\n";
    }
    return 0;
}

int cmd_fitting(const Session& s, std::ostream& out) {
    IrrelevantIdeal B = irrelevant_components(*s.ring);
    const int rt = s.presentation->matrix.target().rank();
    auto one = [&](int j) {
        return s.want_saturate ? saturated_fitting(j, *s.presentation, B)
                               : fitting_ideal(j, *s.presentation);
    };
    if (s.fitting_j >= 0) {
        Ideal f = one(s.fitting_j);
        if (s.want_json) {
            json j;
            j["schema"] = "virtua/1";
            j["command"] = "fitting";
            j["j"] = s.fitting_j;
            j["saturated"] = s.want_saturate;
            j["generators"] = ideal_strings(f);
            out << j.dump(2) << "\n";
        } else {
            for (const auto& g : ideal_strings(f)) out << g << "\n";
            if (f.is_zero()) out << "0\n";
        }
        return 0;
    }
    if (s.want_json) {
        json j;
        j["schema"] = "virtua/1";
        j["command"] = "fitting";
        j["saturated"] = s.want_saturate;
        j["ladder"] = json::array();
        for (int jj = 0; jj <= rt; ++jj) {
            json e;
            e["j"] = jj;
            e["generators"] = ideal_strings(one(jj));
            j["ladder"].push_back(e);
        }
        out << j.dump(2) << "\n";
    } else {
        for (int jj = 0; jj <= rt; ++jj) {
            Ideal f = one(jj);
            out << "Fitt_" << jj << (s.want_saturate ? " : B^inf" : "") << " = ";
            if (f.is_zero()) {
                out << "0";
            } else {
                bool first = true;
                for (const auto& g : ideal_strings(f)) {
                    out << (first ? "" : ", ") << g;
                    first = false;
                }
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_locally_free(const Session& s, std::ostream& out) {
    auto r = is_locally_free_rank(*s.presentation, irrelevant_components(*s.ring));
    if (s.want_json) {
        json j;
        j["schema"] = "virtua/1";
        j["command"] = "locally-free";
        j["rank"] = r ? json(*r) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << (r ? std::to_string(*r) : std::string("none")) << "\n";
    }
    return r ? 0 : 1;
}

int cmd_homology(const Session& s, std::ostream& out) {
    Presentation P = homology_presentation(*s.complex_chain, s.index);
    Ideal fitt0 = fitt0_of(P);
    bool zero = fitt0.is_unit();
    bool torsion = zero;
    if (!zero) {
        Ideal b = materialize_irrelevant(s.ring, irrelevant_components(*s.ring));
        torsion = true;
        for (const Poly& g : b.gens())
            if (!radical_membership(g, fitt0)) {
                torsion = false;
                break;
            }
    }
    if (s.want_json) {
        json j;
        j["schema"] = "virtua/1";
        j["command"] = "homology";
        j["index"] = s.index;
        j["generators"] = json::array();
        for (const auto& t : P.matrix.target().twists) {
            json tj = json::array();
            for (int c = 0; c < t.rank(); ++c) tj.push_back(t.c[c]);
            j["generators"].push_back(tj);
        }
        json rows = json::array();
        for (int i = 0; i < P.matrix.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < P.matrix.cols(); ++c)
                row.push_back(print_poly(*s.ring, P.matrix.entry(i, c)));
            rows.push_back(row);
        }
        j["relations"] = rows;
        j["fitt0"] = ideal_strings(fitt0);
        j["zero"] = zero;
        j["torsion"] = torsion;
        out << j.dump(2) << "\n";
    } else {
        out << "H_" << s.index << ": " << P.matrix.target().rank() << " generators, "
            << P.matrix.cols() << " relations, "
            << (zero ? "zero" : (torsion ? "B-torsion" : "not B-torsion")) << "\n";
    }
    return 0;
}

int cmd_rank(const Session& s, std::ostream& out) {
    int r = rank_of(s.presentation->matrix, s.seed);
    if (s.want_json) {
        json j;
        j["schema"] = "virtua/1";
        j["command"] = "rank";
        j["seed"] = s.seed;
        j["rank"] = r;
        out << j.dump(2) << "\n";
    } else {
        out << "seed " << s.seed << "\n" << r << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"virtua: virtuality of graded free complexes over Cox rings"};
    app.require_subcommand(1);

    RawArgs raw;
    CLI::App* c_check = app.add_subcommand("check", "decide virtuality of a complex");
    c_check->add_option("--complex", raw.complex_path, "complex JSON")->required();
    c_check->add_flag("--oracle", raw.oracle, "cross-check through homology B-torsion");

    CLI::App* c_mfr = app.add_subcommand("mfr", "minimal free resolution of S/I");
    c_mfr->add_option("--ideal", raw.ideal_path, "ideal file")->required();
    c_mfr->add_option("--maxlen", raw.maxlen, "length cap");

    CLI::App* c_vres = app.add_subcommand("vres-pair", "virtual resolution of a pair");
    c_vres->add_option("--ideal", raw.ideal_path, "ideal file (resolved first)");
    c_vres->add_option("--complex", raw.complex_path, "resolution JSON");
    c_vres->add_option("--degree", raw.degree_text, "truncation degree a,b")->required();
    c_vres->add_option("--maxlen", raw.maxlen, "length cap");

    CLI::App* c_sat = app.add_subcommand("saturate", "saturate an ideal");
    c_sat->add_option("--ideal", raw.ideal_path, "ideal file")->required();
    c_sat->add_option("--by", raw.by_text, "B (default) saturates by the irrelevant ideal");
    c_sat->add_option("--by-ideal", raw.by_ideal_path, "saturate by this ideal instead");

    CLI::App* c_depth = app.add_subcommand("depth", "depth (grade) of an ideal");
    c_depth->add_option("--ideal", raw.ideal_path, "ideal file")->required();
    c_depth->add_flag("--saturate", raw.saturate_flag, "saturate by B first");

    CLI::App* c_fit = app.add_subcommand("fitting", "Fitting ideals of a presentation");
    c_fit->add_option("--presentation", raw.presentation_path, "presentation JSON")
        ->required();
    c_fit->add_option("--j", raw.fitting_j, "single Fitting index");
    c_fit->add_flag("--saturate", raw.saturate_flag, "saturate by B");

    CLI::App* c_lf = app.add_subcommand("locally-free", "locally-free rank of the sheaf");
    c_lf->add_option("--presentation", raw.presentation_path, "presentation JSON")
        ->required();

    CLI::App* c_hom = app.add_subcommand("homology", "presentation of H_i");
    c_hom->add_option("--complex", raw.complex_path, "complex JSON")->required();
    c_hom->add_option("--index", raw.index, "homology index i")->required();

    CLI::App* c_rank = app.add_subcommand("rank", "rank of a graded matrix");
    c_rank->add_option("--presentation", raw.presentation_path, "matrix JSON")->required();

    for (CLI::App* sub : {c_check, c_mfr, c_vres, c_sat, c_depth, c_fit, c_lf, c_hom, c_rank})
        add_common(sub, raw);

    std::vector<const char*> argv;
    argv.push_back("virtua");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        compute_limits().max_seconds = raw.max_seconds;
        begin_compute_window();
        if (raw.serial) set_default_exec_mode(ExecMode::Serial);
#ifdef VIRTUA_HAVE_OPENMP
        if (raw.threads > 0) omp_set_num_threads(raw.threads);
#endif

        Session s;
        s.seed = raw.seed;
        s.want_oracle = raw.oracle;
        s.want_json = raw.as_json;
        s.want_saturate = raw.saturate_flag;
        s.index = raw.index;
        s.maxlen = raw.maxlen;
        s.fitting_j = raw.fitting_j;
        s.ring = need_ring(raw);
        if (!raw.complex_path.empty())
            s.complex_chain = complex_from_json_file(raw.complex_path, s.ring);
        if (!raw.ideal_path.empty()) s.ideal = ideal_from_file(s.ring, raw.ideal_path);
        if (!raw.presentation_path.empty())
            s.presentation = presentation_from_json_file(raw.presentation_path, s.ring);
        if (!raw.by_ideal_path.empty())
            s.by_ideal = ideal_from_file(s.ring, raw.by_ideal_path);
        else if (raw.by_text != "B")
            throw InputError("--by only accepts 'B'; use --by-ideal for other ideals");

        if (app.got_subcommand(c_check)) {
            s.subcommand = "check";
            return cmd_check(s, out);
        }
        if (app.got_subcommand(c_mfr)) {
            s.subcommand = "mfr";
            if (!s.ideal) throw InputError("mfr needs --ideal");
            return cmd_mfr(s, out);
        }
        if (app.got_subcommand(c_vres)) {
            s.subcommand = "vres-pair";
            if (!s.ideal && !s.complex_chain)
                throw InputError("vres-pair needs --ideal or --complex");
            s.degree = parse_degree(raw.degree_text, s.ring->pic_rank());
            return cmd_vres_pair(s, out);
        }
        if (app.got_subcommand(c_sat)) {
            s.subcommand = "saturate";
            return cmd_saturate(s, out);
        }
        if (app.got_subcommand(c_depth)) {
            s.subcommand = "depth";
            return cmd_depth(s, out);
        }
        if (app.got_subcommand(c_fit)) {
            s.subcommand = "fitting";
            return cmd_fitting(s, out);
        }
        if (app.got_subcommand(c_lf)) {
            s.subcommand = "locally-free";
            return cmd_locally_free(s, out);
        }
        if (app.got_subcommand(c_hom)) {
            s.subcommand = "homology";
            return cmd_homology(s, out);
        }
        if (app.got_subcommand(c_rank)) {
            s.subcommand = "rank";
            return cmd_rank(s, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace virtua
