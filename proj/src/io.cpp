#include "virtua/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace virtua {

using nlohmann::json;

// ---------------------------------------------------------------------------
// polynomial strings

namespace {

// display order: blockwise grevlex with earlier blocks dominating, matching
// how the source strings are written
bool display_greater(const CoxRing& ring, const Monomial& a, const Monomial& b) {
    int at = 0;
    for (const auto& blk : ring.blocks()) {
        std::int64_t da = 0, db = 0;
        for (int v = at; v < at + blk.count; ++v) {
            da += a.exp(v);
            db += b.exp(v);
        }
        if (da != db) return da > db;
        for (int v = at + blk.count - 1; v >= at; --v)
            if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v);
        at += blk.count;
    }
    return false;
}

}  // namespace

std::string print_poly(const CoxRing& ring, const Poly& f) {
    if (f.is_zero()) return "0";
    std::vector<Term> terms = f.terms();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return display_greater(ring, a.mon, b.mon);
    });
    std::string out;
    bool first = true;
    for (const Term& t : terms) {
        std::int64_t c = t.coef.balanced();
        bool negative = c < 0;
        std::uint64_t mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        first = false;
        std::string mon;
        for (int v = 0; v < ring.nvars(); ++v) {
            std::int32_t e = t.mon.exp(v);
            if (e == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += ring.var_name(v);
            if (e >= 2) mon += "^" + std::to_string(e);
        }
        if (mon.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += mon;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const CoxRing& ring;
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial '" + s + "': " + what + " at position " +
                         std::to_string(pos));
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }
    // longest variable-name match at the current position
    int variable() {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (int v = 0; v < ring.nvars(); ++v) {
            const std::string& name = ring.var_name(v);
            if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
                best = v;
                best_len = name.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    Poly parse() {
        std::vector<Term> terms;
        skip_ws();
        if (pos == s.size()) fail("empty input");
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        for (;;) {
            terms.push_back(term(negative));
            skip_ws();
            if (pos == s.size()) break;
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                fail("expected '+' or '-'");
        }
        return Poly::from_terms(std::move(terms), canonical_order());
    }

    Term term(bool negative) {
        Scalar coef = Scalar::one(ring.modulus());
        if (negative) coef = -coef;
        Monomial mon = Monomial::one(ring.nvars());
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coef = coef * Scalar(ring.modulus(), integer());
                any = true;
            } else {
                int v = variable();
                if (v < 0) {
                    if (!any) fail("expected a coefficient or variable");
                    break;
                }
                std::int64_t e = 1;
                if (eat('^')) e = integer();
                if (e < 0) fail("negative exponent");
                mon = mon * Monomial::variable(ring.nvars(), v, static_cast<std::int32_t>(e));
                any = true;
            }
            if (!eat('*')) break;
        }
        return Term{std::move(mon), coef};
    }
};

}  // namespace

Poly parse_poly(const CoxRing& ring, const std::string& text) {
    PolyParser parser{ring, text};
    Poly f = parser.parse();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return f;
}

Multidegree parse_degree(const std::string& text, int rank) {
    std::vector<std::int32_t> comps;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            comps.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw InputError("bad degree component '" + part + "'");
        }
    }
    if (static_cast<int>(comps.size()) != rank)
        throw InputError("degree '" + text + "' needs " + std::to_string(rank) +
                         " components");
    return Multidegree(std::move(comps));
}

// ---------------------------------------------------------------------------
// ring JSON

namespace {

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON in " + what);
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Multidegree degree_from_json(const json& j) {
    if (!j.is_array()) throw InputError("degree must be an array");
    std::vector<std::int32_t> c;
    for (const auto& x : j) c.push_back(x.get<std::int32_t>());
    return Multidegree(std::move(c));
}

json degree_to_json(const Multidegree& d) {
    json out = json::array();
    for (auto x : d.c) out.push_back(x);
    return out;
}

}  // namespace

RingPtr ring_from_json_text(const std::string& text) {
    json j = parse_json(text, "ring descriptor");
    if (!j.contains("p") || !j.contains("blocks"))
        throw InputError("ring descriptor needs 'p' and 'blocks'");
    std::uint32_t p = j["p"].get<std::uint32_t>();
    std::vector<CoxRing::Block> blocks;
    for (const auto& bj : j["blocks"]) {
        blocks.push_back(CoxRing::Block{bj.at("name").get<std::string>(),
                                        bj.at("count").get<int>(),
                                        degree_from_json(bj.at("degree"))});
    }
    const int k = static_cast<int>(blocks.size());

    bool product = true;
    for (int b = 0; b < k && product; ++b) {
        if (blocks[b].degree.rank() != k || blocks[b].count < 2) product = false;
        for (int c = 0; c < blocks[b].degree.rank() && product; ++c)
            if (blocks[b].degree.c[c] != (c == b ? 1 : 0)) product = false;
    }
    if (product && !j.contains("components")) {
        std::vector<int> dims;
        for (const auto& b : blocks) dims.push_back(b.count - 1);
        auto ring = CoxRing::product_space(dims, p);
        if (j.contains("dimX") && j["dimX"].get<int>() != ring->dim_x())
            throw InputError("dimX does not match the product structure");
        return ring;
    }

    if (!j.contains("dimX"))
        throw InputError("general Cox data needs an explicit dimX");
    int dim_x = j["dimX"].get<int>();
    // expanded variable names, for resolving component lists
    std::vector<std::string> names;
    for (const auto& b : blocks)
        for (int i = 0; i < b.count; ++i)
            names.push_back(b.count == 1 ? b.name : b.name + std::to_string(i));
    std::vector<std::vector<int>> comps;
    if (j.contains("components")) {
        for (const auto& cj : j["components"]) {
            std::vector<int> comp;
            for (const auto& nj : cj) {
                std::string nm = nj.get<std::string>();
                auto it = std::find(names.begin(), names.end(), nm);
                if (it == names.end())
                    throw InputError("component names unknown variable '" + nm + "'");
                comp.push_back(static_cast<int>(it - names.begin()));
            }
            comps.push_back(std::move(comp));
        }
    } else {
        int at = 0;
        for (const auto& b : blocks) {
            std::vector<int> comp;
            for (int i = 0; i < b.count; ++i) comp.push_back(at + i);
            comps.push_back(std::move(comp));
            at += b.count;
        }
    }
    return std::make_shared<CoxRing>(std::move(blocks), dim_x, p, std::move(comps));
}

RingPtr ring_from_json_file(const std::string& path) {
    return ring_from_json_text(slurp(path));
}

std::string ring_to_json_text(const CoxRing& ring) {
    json j;
    j["p"] = ring.modulus();
    j["blocks"] = json::array();
    for (const auto& b : ring.blocks()) {
        json bj;
        bj["name"] = b.name;
        bj["count"] = b.count;
        bj["degree"] = degree_to_json(b.degree);
        j["blocks"].push_back(bj);
    }
    j["dimX"] = ring.dim_x();
    if (!ring.is_product()) {
        json comps = json::array();
        for (const auto& comp : ring.irrelevant_component_vars()) {
            json cj = json::array();
            for (int v : comp) cj.push_back(ring.var_name(v));
            comps.push_back(cj);
        }
        j["components"] = comps;
    }
    return j.dump();
}

// ---------------------------------------------------------------------------
// ideals

Ideal ideal_from_lines(const RingPtr& ring, const std::vector<std::string>& lines) {
    std::vector<Poly> gens;
    for (const std::string& raw : lines) {
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        gens.push_back(parse_poly(*ring, line));
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_from_file(const RingPtr& ring, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return ideal_from_lines(ring, lines);
}

std::vector<std::string> ideal_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const Poly& g : I.reduced_gb().elems) out.push_back(print_poly(*I.ring(), g));
    return out;
}

// ---------------------------------------------------------------------------
// complexes and presentations

namespace {

RingPtr resolve_ring(const json& j, RingPtr ring, const std::string& what) {
    if (j.contains("ring")) {
        RingPtr embedded = ring_from_json_text(j["ring"].dump());
        if (ring && !(*ring == *embedded))
            throw InputError(what + ": embedded ring disagrees with --ring");
        return embedded;
    }
    if (!ring) throw InputError(what + " has no ring and none was supplied");
    return ring;
}

std::vector<Multidegree> twists_from_json(const json& j) {
    std::vector<Multidegree> twists;
    for (const auto& tj : j) twists.push_back(degree_from_json(tj));
    return twists;
}

GradedMatrix matrix_from_json(const RingPtr& ring, const json& rows, FreeModule source,
                              FreeModule target) {
    std::vector<std::vector<Poly>> entries;
    if (!rows.is_array() || static_cast<int>(rows.size()) != target.rank())
        throw InputError("matrix needs " + std::to_string(target.rank()) + " rows");
    for (const auto& rj : rows) {
        if (!rj.is_array() || static_cast<int>(rj.size()) != source.rank())
            throw InputError("matrix row needs " + std::to_string(source.rank()) +
                             " entries");
        std::vector<Poly> row;
        for (const auto& ej : rj) {
            std::string s = ej.get<std::string>();
            row.push_back(s == "0" ? Poly{} : parse_poly(*ring, s));
        }
        entries.push_back(std::move(row));
    }
    return GradedMatrix(std::move(source), std::move(target), std::move(entries));
}

}  // namespace

FreeComplex complex_from_json_text(const std::string& text, RingPtr ring) {
    json j = parse_json(text, "complex");
    ring = resolve_ring(j, std::move(ring), "complex");
    if (!j.contains("modules")) throw InputError("complex needs 'modules'");
    FreeComplex F;
    for (const auto& mj : j["modules"])
        F.modules.push_back(FreeModule{ring, twists_from_json(mj.at("twists"))});
    const auto& maps = j.contains("maps") ? j["maps"] : json::array();
    if (maps.size() + 1 != F.modules.size())
        throw InputError("complex needs one map per consecutive module pair");
    for (std::size_t i = 0; i < maps.size(); ++i)
        F.maps.push_back(matrix_from_json(ring, maps[i], F.modules[i + 1], F.modules[i]));
    validate_complex(F);
    return F;
}

FreeComplex complex_from_json_file(const std::string& path, RingPtr ring) {
    return complex_from_json_text(slurp(path), std::move(ring));
}

std::string complex_to_json_text(const FreeComplex& F) {
    json j;
    j["ring"] = json::parse(ring_to_json_text(*F.ring()));
    j["modules"] = json::array();
    for (const auto& m : F.modules) {
        json mj;
        mj["twists"] = json::array();
        for (const auto& t : m.twists) mj["twists"].push_back(degree_to_json(t));
        j["modules"].push_back(mj);
    }
    j["maps"] = json::array();
    for (const auto& mp : F.maps) {
        json rows = json::array();
        for (int i = 0; i < mp.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < mp.cols(); ++c)
                row.push_back(print_poly(*F.ring(), mp.entry(i, c)));
            rows.push_back(row);
        }
        j["maps"].push_back(rows);
    }
    return j.dump(2);
}

Presentation presentation_from_json_text(const std::string& text, RingPtr ring) {
    json j = parse_json(text, "presentation");
    ring = resolve_ring(j, std::move(ring), "presentation");
    if (!j.contains("target") || !j.contains("source") || !j.contains("matrix"))
        throw InputError("presentation needs 'target', 'source' and 'matrix'");
    FreeModule target{ring, twists_from_json(j["target"])};
    FreeModule source{ring, twists_from_json(j["source"])};
    return Presentation{
        matrix_from_json(ring, j["matrix"], std::move(source), std::move(target))};
}

Presentation presentation_from_json_file(const std::string& path, RingPtr ring) {
    return presentation_from_json_text(slurp(path), std::move(ring));
}

// ---------------------------------------------------------------------------
// reports

namespace {

json depth_to_json(const ExtInt& d) {
    if (d.is_infinite()) return json("inf");
    return json(d.value());
}

json cert_to_json(const TorsionCertificate& c, const CoxRing& ring) {
    json j;
    j["index"] = c.index;
    j["fitt0"] = ideal_strings(c.fitt0);
    j["homology_zero"] = c.homology_zero;
    j["torsion"] = c.torsion;
    json comps = json::array();
    for (const auto& comp : c.component_witnesses) {
        json wj = json::array();
        for (const auto& [v, in] : comp) {
            json e;
            e["var"] = ring.var_name(v);
            e["in_radical"] = in;
            wj.push_back(e);
        }
        comps.push_back(wj);
    }
    j["component_witnesses"] = comps;
    return j;
}

}  // namespace

std::string check_report_to_json(const VirtualityReport& report,
                                 const std::vector<TorsionCertificate>* certs) {
    json j;
    j["schema"] = "virtua/1";
    j["command"] = "check";
    j["seed"] = report.seed;
    j["virtual"] = report.verdict_theorem;
    j["exactness_note"] = report.exactness_note;
    if (report.verdict_oracle)
        j["oracle"] = *report.verdict_oracle;
    else
        j["oracle"] = nullptr;
    j["records"] = json::array();
    for (const auto& r : report.records) {
        json rj;
        rj["i"] = r.index;
        rj["rank_phi"] = r.rank_phi;
        rj["rank_phi_next"] = r.rank_phi_next;
        rj["rank_module"] = r.rank_module;
        rj["condition_a"] = r.condition_a;
        rj["minors"] = ideal_strings(r.minors);
        rj["saturation"] = ideal_strings(r.saturation);
        rj["depth_unsaturated"] = depth_to_json(r.depth_unsaturated);
        rj["depth_saturated"] = depth_to_json(r.depth_saturated);
        rj["condition_b"] = r.condition_b;
        j["records"].push_back(rj);
    }
    if (certs) {
        json cj = json::array();
        for (const auto& c : *certs) cj.push_back(cert_to_json(c, *c.fitt0.ring()));
        j["certificates"] = cj;
    }
    return j.dump(2);
}

std::string check_report_to_text(const VirtualityReport& report,
                                 const std::vector<TorsionCertificate>* certs) {
    std::ostringstream out;
    out << "seed " << report.seed << "\n";
    for (const auto& r : report.records) {
        out << "i=" << r.index << "  rank(phi_i)=" << r.rank_phi
            << "  rank(phi_i+1)=" << r.rank_phi_next << "  rank(F_i)=" << r.rank_module
            << "  (a) " << (r.condition_a ? "ok" : "FAIL")
            << "  depth=" << r.depth_unsaturated.str()
            << "  depth_sat=" << r.depth_saturated.str() << "  (b) "
            << (r.condition_b ? "ok" : "FAIL") << "\n";
    }
    out << "exactness_note: " << (report.exactness_note ? "true" : "false") << "\n";
    if (certs) {
        for (const auto& c : *certs) {
            out << "H_" << c.index << ": "
                << (c.homology_zero ? "zero" : (c.torsion ? "B-torsion" : "NOT B-torsion"))
                << "\n";
        }
        if (report.verdict_oracle)
            out << "oracle verdict: " << (*report.verdict_oracle ? "virtual" : "not virtual")
                << "\n";
    }
    out << "verdict: " << (report.verdict_theorem ? "virtual" : "not virtual") << "\n";
    return out.str();
}

}  // namespace virtua
