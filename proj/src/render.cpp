#include "bgg/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bgg {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, json, csv or latex)");
}

std::string root_name(const RootSystem& rs, int root_idx) {
    const Weight& b = rs.positive_roots()[root_idx];
    if (rs.rank() <= 9) {
        std::string s;
        for (int i = 0; i < rs.rank(); ++i)
            for (int k = 0; k < b.c[i]; ++k) s += std::to_string(i + 1);
        return s;
    }
    return "[" + b.str() + "]";
}

std::string generator_name(const RootSystem& rs, int root_idx) { return "f" + root_name(rs, root_idx); }

std::string weight_str(const Weight& w) { return w.str(); }

std::string pbw_to_string(const RootSystem& rs, const PBWElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : x.terms) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string factors;
        for (std::size_t b = 0; b < mono.size(); ++b) {
            if (mono[b] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += generator_name(rs, static_cast<int>(b));
            if (mono[b] > 1) factors += "^" + std::to_string(mono[b]);
        }
        if (factors.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += factors;
        } else {
            out += a.get_str() + "*" + factors;
        }
    }
    return out;
}

std::string render_maps(const Engine& engine, const BGGComplex& cx, bool d2_ok, Format fmt) {
    const WeylGroup& W = engine.weyl();
    const BruhatGraph& graph = engine.graph();
    const RootSystem& rs = engine.roots();

    if (fmt == Format::Json) {
        json j;
        j["type"] = rs.type().str();
        j["lambda"] = cx.lambda.c;
        j["seed"] = engine.seed();
        j["d_squared_zero"] = d2_ok;
        j["edges"] = json::array();
        for (int e = 0; e < graph.num_edges(); ++e) {
            const BruhatEdge& ed = graph.edges()[e];
            json je;
            je["source"] = W.word_str(ed.x);
            je["target"] = W.word_str(ed.w);
            je["reflection_root"] = rs.positive_roots()[ed.root].c;
            je["sign"] = engine.signs()[e];
            je["weight"] = cx.xi[e].c;
            json terms = json::array();
            for (const auto& [mono, c] : cx.maps[e].terms) terms.push_back({{"coeff", c.get_str()}, {"exp", mono}});
            je["terms"] = std::move(terms);
            je["text"] = pbw_to_string(rs, cx.maps[e]);
            j["edges"].push_back(std::move(je));
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    if (fmt != Format::Text) throw std::invalid_argument("maps support text and json output");
    out << "# maps type=" << rs.type().str() << " lambda=" << cx.lambda.str() << " seed=" << engine.seed() << "\n";
    std::size_t wcol = 1;
    for (int v = 0; v < W.size(); ++v) wcol = std::max(wcol, W.word_str(v).size());
    for (int e = 0; e < graph.num_edges(); ++e) {
        const BruhatEdge& ed = graph.edges()[e];
        std::string src = W.word_str(ed.x), tgt = W.word_str(ed.w);
        out << src << std::string(wcol - src.size() + 1, ' ') << "-> " << tgt
            << std::string(wcol - tgt.size() + 1, ' ') << (engine.signs()[e] > 0 ? "[+]" : "[-]") << " t="
            << root_name(rs, ed.root) << " : " << pbw_to_string(rs, cx.maps[e]) << "\n";
    }
    out << (d2_ok ? "d^2 = 0 verified" : "d^2 = 0 FAILED") << " (" << graph.num_edges() << " maps, "
        << graph.squares().size() << " squares)\n";
    return out.str();
}

namespace {

std::string latex_weight(const Weight& w) {
    std::string s;
    bool first = true;
    for (int i = 0; i < w.rank(); ++i) {
        if (w.c[i] == 0) continue;
        if (!first) s += w.c[i] > 0 ? "+" : "";
        if (w.c[i] == -1) s += "-";
        else if (w.c[i] != 1) s += std::to_string(w.c[i]);
        s += "\\alpha_{" + std::to_string(i + 1) + "}";
        first = false;
    }
    return first ? "0" : s;
}

}  // namespace

std::string render_cohomology(const CohomologyResult& res, Format fmt) {
    const int L = res.max_degree;
    if (fmt == Format::Json) {
        json j;
        j["cartan_type"] = res.type.str();
        j["module"] = res.module;
        j["max_degree"] = L;
        j["per_lambda"] = json::array();
        for (const auto& lm : res.per_lambda) {
            json jl;
            jl["lambda"] = lm.lambda.c;
            jl["dim"] = lm.l_dim.get_str();
            jl["mults_by_degree"] = lm.mults;
            j["per_lambda"].push_back(std::move(jl));
        }
        json dims = json::array();
        for (const auto& d : res.dims_by_degree) dims.push_back(d.get_str());
        j["dims_by_degree"] = std::move(dims);
        return j.dump(2) + "\n";
    }
    if (fmt == Format::Csv) {
        std::ostringstream out;
        out << "lambda,dim_L";
        for (int k = 0; k <= L; ++k) out << ",H" << k;
        out << "\n";
        for (const auto& lm : res.per_lambda) {
            out << '"' << lm.lambda.str() << '"' << ',' << lm.l_dim.get_str();
            for (long m : lm.mults) out << ',' << m;
            out << "\n";
        }
        out << "TOTAL,";
        for (const auto& d : res.dims_by_degree) out << ',' << d.get_str();
        out << "\n";
        return out.str();
    }
    if (fmt == Format::Latex) {
        std::ostringstream out;
        out << "\\begin{tabular}{r|l c}\n  $k$ & $H^k$ & $\\dim$ \\\\\n  \\hline\n";
        for (int k = 0; k <= L; ++k) {
            std::string cell;
            for (const auto& lm : res.per_lambda) {
                if (lm.mults[k] == 0) continue;
                if (!cell.empty()) cell += " \\oplus ";
                cell += "L(" + latex_weight(lm.lambda) + ")";
                if (lm.mults[k] > 1) cell += "^{\\oplus " + std::to_string(lm.mults[k]) + "}";
            }
            if (cell.empty()) cell = "0";
            out << "  $" << k << "$ & $" << cell << "$ & $" << res.dims_by_degree[k].get_str() << "$ \\\\\n";
        }
        out << "\\end{tabular}\n";
        return out.str();
    }
    std::ostringstream out;
    out << "# cohomology type=" << res.type.str() << " module=" << res.module << "\n";
    bool anything = false;
    for (int k = 0; k <= L; ++k) {
        if (res.dims_by_degree[k] == 0) continue;
        anything = true;
        out << "H^" << k << " = ";
        bool first = true;
        for (const auto& lm : res.per_lambda) {
            if (lm.mults[k] == 0) continue;
            if (!first) out << " + ";
            out << "L(" << lm.lambda.str() << ")";
            if (lm.mults[k] > 1) out << "^" << lm.mults[k];
            first = false;
        }
        out << "   [dim " << res.dims_by_degree[k].get_str() << "]\n";
    }
    if (!anything) out << "H^* = 0\n";
    return out.str();
}

std::string render_table(const TableResult& t, Format fmt) {
    auto row_label = [&](std::size_t r) {
        const auto& p = t.parabolics[r];
        if (p.empty()) return std::string("-");
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
        return s;
    };
    std::size_t kmax = 0;
    for (const auto& row : t.dims) kmax = std::max(kmax, row.size());

    if (fmt == Format::Json) {
        json j;
        j["cartan_type"] = t.type.str();
        j["rows"] = json::array();
        for (std::size_t r = 0; r < t.dims.size(); ++r) {
            json jr;
            json par = json::array();
            for (int i : t.parabolics[r]) par.push_back(i + 1);
            jr["parabolic"] = std::move(par);
            json dims = json::array();
            for (const auto& d : t.dims[r]) dims.push_back(d.get_str());
            jr["dims"] = std::move(dims);
            j["rows"].push_back(std::move(jr));
        }
        j["higher_cohomology_vanishes"] = t.higher_vanishes;
        return j.dump(2) + "\n";
    }
    if (fmt == Format::Csv) {
        std::ostringstream out;
        out << "parabolic";
        for (std::size_t k = 0; k < kmax; ++k) out << ",k" << k;
        out << "\n";
        for (std::size_t r = 0; r < t.dims.size(); ++r) {
            out << '"' << row_label(r) << '"';
            for (const auto& d : t.dims[r]) out << ',' << d.get_str();
            out << "\n";
        }
        return out.str();
    }
    if (fmt == Format::Latex) {
        std::ostringstream out;
        out << "\\begin{tabular}{r|";
        for (std::size_t k = 0; k < kmax; ++k) out << " c";
        out << "}\n  k";
        for (std::size_t k = 0; k < kmax; ++k) out << " & " << k;
        out << " \\\\\n  \\hline \\hline\n";
        for (std::size_t r = 0; r < t.dims.size(); ++r) {
            const auto& p = t.parabolics[r];
            std::string label;
            for (std::size_t i = 0; i < p.size(); ++i)
                label += (i ? "," : "") + ("\\alpha_" + std::to_string(p[i] + 1));
            out << "  " << label;
            for (const auto& d : t.dims[r]) out << " & " << d.get_str();
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
        return out.str();
    }
    std::ostringstream out;
    out << "# table type=" << t.type.str() << "  dim H^0(X, wedge^k T_X)\n";
    std::size_t lbl = 9;
    for (std::size_t r = 0; r < t.dims.size(); ++r) lbl = std::max(lbl, row_label(r).size());
    out << std::string(lbl, ' ') << " |";
    for (std::size_t k = 0; k < kmax; ++k) out << " k=" << k << "\t";
    out << "\n";
    for (std::size_t r = 0; r < t.dims.size(); ++r) {
        std::string la = row_label(r);
        out << std::string(lbl - la.size(), ' ') << la << " |";
        for (const auto& d : t.dims[r]) out << " " << d.get_str() << "\t";
        out << "\n";
    }
    out << "# higher cohomology " << (t.higher_vanishes ? "vanishes in all computed entries" : "DOES NOT vanish")
        << "\n";
    return out.str();
}

}  // namespace bgg
