#include "qkz/resulttable.hpp"

#include "qkz/basis.hpp"
#include "qkz/psivec.hpp"
#include "qkz/sumrules.hpp"
#include "qkz/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace qkz {

namespace {

using ojson = nlohmann::ordered_json;

const char* const kinds[] = {"psi", "sumrule", "matrix", "verify-report"};

bool valid_kind(const std::string& k) {
    for (const char* s : kinds)
        if (k == s) return true;
    return false;
}

[[noreturn]] void bad(const std::string& what) {
    throw std::runtime_error("result table: " + what);
}

ojson cell_to(const Cell& c) {
    struct V {
        ojson operator()(long v) const { return v; }
        ojson operator()(const std::string& v) const { return v; }
        ojson operator()(const std::vector<long>& v) const { return v; }
        ojson operator()(const std::vector<std::string>& v) const { return v; }
        ojson operator()(const std::vector<std::vector<std::string>>& v) const { return v; }
    };
    return std::visit(V{}, c);
}

Cell cell_from(const ojson& v) {
    if (v.is_number_integer()) return static_cast<long>(v.get<long long>());
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_array()) bad("value must be an integer, string, or array");
    if (v.empty()) return std::vector<long>{};
    const ojson& head = v.front();
    if (head.is_number_integer()) {
        std::vector<long> out;
        for (const auto& e : v) {
            if (!e.is_number_integer()) bad("mixed integer list");
            out.push_back(static_cast<long>(e.get<long long>()));
        }
        return out;
    }
    if (head.is_string()) {
        std::vector<std::string> out;
        for (const auto& e : v) {
            if (!e.is_string()) bad("mixed string list");
            out.push_back(e.get<std::string>());
        }
        return out;
    }
    if (head.is_array()) {
        std::vector<std::vector<std::string>> out;
        for (const auto& row : v) {
            if (!row.is_array()) bad("mixed grid");
            std::vector<std::string> r;
            for (const auto& e : row) {
                if (!e.is_string()) bad("grid entries must be strings");
                r.push_back(e.get<std::string>());
            }
            out.push_back(std::move(r));
        }
        return out;
    }
    bad("unsupported array element");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::string flat_text(const Cell& c, const char* listsep, const char* rowsep) {
    struct V {
        const char* ls;
        const char* rs;
        std::string operator()(long v) const { return std::to_string(v); }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(const std::vector<long>& v) const {
            std::string out;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) out += ls;
                out += std::to_string(v[i]);
            }
            return out;
        }
        std::string operator()(const std::vector<std::string>& v) const { return joined(v); }
        std::string operator()(const std::vector<std::vector<std::string>>& v) const {
            std::string out;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) out += rs;
                out += joined(v[i]);
            }
            return out;
        }
        std::string joined(const std::vector<std::string>& v) const {
            std::string out;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) out += ls;
                out += v[i];
            }
            return out;
        }
    };
    return std::visit(V{listsep, rowsep}, c);
}

}  // namespace

void Record::put(const std::string& key, Cell v) {
    // empty lists collapse to one canonical kind so decoding is unambiguous
    if (auto* s = std::get_if<std::vector<std::string>>(&v); s && s->empty())
        v = std::vector<long>{};
    if (auto* g = std::get_if<std::vector<std::vector<std::string>>>(&v); g && g->empty())
        v = std::vector<long>{};
    for (auto& f : fields)
        if (f.first == key) {
            f.second = std::move(v);
            return;
        }
    fields.emplace_back(key, std::move(v));
}

const Cell* Record::find(const std::string& key) const {
    for (const auto& f : fields)
        if (f.first == key) return &f.second;
    return nullptr;
}

std::string engine_version() {
#ifdef QKZLOOP_VERSION_STRING
    return std::string("qkzloop ") + QKZLOOP_VERSION_STRING;
#else
    return "qkzloop 0.0.0";
#endif
}

std::string to_json(const ResultTable& t) {
    ojson j;
    j["schema_version"] = t.schema_version;
    j["kind"] = t.kind;
    ojson sizes = ojson::object();
    for (const auto& [k, v] : t.sizes) sizes[k] = v;
    j["sizes"] = std::move(sizes);
    ojson prov = ojson::object();
    prov["command"] = t.command;
    prov["engine"] = t.engine;
    j["provenance"] = std::move(prov);
    ojson rows = ojson::array();
    for (const auto& rec : t.rows) {
        ojson r = ojson::object();
        for (const auto& [k, c] : rec.fields) r[k] = cell_to(c);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
}

ResultTable from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        bad(std::string("parse failure: ") + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    for (const char* key : {"schema_version", "kind", "sizes", "provenance", "rows"})
        if (!j.contains(key)) bad(std::string("missing field ") + key);

    ResultTable t;
    if (!j["schema_version"].is_number_integer()) bad("schema_version must be an integer");
    t.schema_version = j["schema_version"].get<int>();
    if (!j["kind"].is_string()) bad("kind must be a string");
    t.kind = j["kind"].get<std::string>();
    if (!valid_kind(t.kind)) bad("unknown kind '" + t.kind + "'");

    const ojson& sizes = j["sizes"];
    if (!sizes.is_object()) bad("sizes must be an object");
    for (auto it = sizes.begin(); it != sizes.end(); ++it) {
        if (!it.value().is_number_integer()) bad("size values must be integers");
        t.sizes.emplace_back(it.key(), static_cast<long>(it.value().get<long long>()));
    }

    const ojson& prov = j["provenance"];
    if (!prov.is_object() || !prov.contains("command") || !prov.contains("engine") ||
        !prov["command"].is_string() || !prov["engine"].is_string())
        bad("provenance must hold command and engine strings");
    t.command = prov["command"].get<std::string>();
    t.engine = prov["engine"].get<std::string>();

    const ojson& rows = j["rows"];
    if (!rows.is_array()) bad("rows must be an array");
    for (const auto& r : rows) {
        if (!r.is_object()) bad("each row must be an object");
        Record rec;
        for (auto it = r.begin(); it != r.end(); ++it)
            rec.fields.emplace_back(it.key(), cell_from(it.value()));
        t.rows.push_back(std::move(rec));
    }
    return t;
}

std::string to_csv(const ResultTable& t) {
    std::string out;
    out += "# schema_version: " + std::to_string(t.schema_version) + "\n";
    out += "# kind: " + t.kind + "\n";
    for (const auto& [k, v] : t.sizes)
        out += "# size " + k + ": " + std::to_string(v) + "\n";
    out += "# command: " + t.command + "\n";
    out += "# engine: " + t.engine + "\n";
    if (t.rows.empty()) return out;

    // header is the union of keys in order of first appearance; rows missing
    // a key emit an empty cell there
    std::vector<std::string> header;
    for (const auto& rec : t.rows)
        for (const auto& f : rec.fields)
            if (std::find(header.begin(), header.end(), f.first) == header.end())
                header.push_back(f.first);
    {
        std::vector<std::string> esc;
        for (const auto& h : header) esc.push_back(csv_escape(h));
        out += join(esc, ",") + "\n";
    }
    std::vector<std::string> cells;
    for (const auto& rec : t.rows) {
        cells.clear();
        for (const auto& h : header) {
            const Cell* c = rec.find(h);
            cells.push_back(c ? csv_escape(flat_text(*c, ";", "|")) : std::string());
        }
        out += join(cells, ",") + "\n";
    }
    return out;
}

std::string to_pretty(const ResultTable& t) {
    std::string out;
    out += t.kind + " (schema " + std::to_string(t.schema_version) + ")\n";
    for (const auto& [k, v] : t.sizes)
        out += k + " = " + std::to_string(v) + "\n";
    out += "command: " + t.command + "\n";
    out += "engine: " + t.engine + "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        out += "\n[" + std::to_string(i + 1) + "]\n";
        for (const auto& [key, cell] : t.rows[i].fields) {
            if (const auto* g = std::get_if<std::vector<std::vector<std::string>>>(&cell)) {
                out += "  " + key + ":\n";
                for (size_t r = 0; r < g->size(); ++r)
                    out += "    t^" + std::to_string(r) + " | " + join((*g)[r], " ") + "\n";
            } else {
                out += "  " + key + ": " + flat_text(cell, " ", " / ") + "\n";
            }
        }
    }
    return out;
}

std::string table_hash(const ResultTable& t) {
    std::string text = to_json(t);
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> coeff_strings(const TauPoly& p) {
    if (p.is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_str());
    return out;
}

std::vector<std::vector<std::string>> grid_strings(const BiPoly& p) {
    if (p.is_zero()) return {{"0"}};
    size_t width = 1;
    for (const auto& row : p.rows())
        width = std::max(width, static_cast<size_t>(row.degree() + 1));
    std::vector<std::vector<std::string>> out;
    for (const auto& row : p.rows()) {
        std::vector<std::string> r;
        for (size_t k = 0; k < width; ++k) r.push_back(row.coeff(static_cast<int>(k)).get_str());
        out.push_back(std::move(r));
    }
    return out;
}

TauPoly tau_from_strings(const std::vector<std::string>& v) {
    std::vector<Int> c;
    c.reserve(v.size());
    for (const auto& s : v) c.emplace_back(s);
    return TauPoly(std::move(c));
}

BiPoly bipoly_from_grid(const std::vector<std::vector<std::string>>& g) {
    BiPoly out;
    for (size_t j = 0; j < g.size(); ++j)
        out += BiPoly::t_term(tau_from_strings(g[j]), static_cast<int>(j));
    return out;
}

void write_text_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

std::optional<std::string> read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return ss.str();
}

namespace {

std::vector<long> longs(const std::vector<int>& v) {
    return std::vector<long>(v.begin(), v.end());
}

}  // namespace

ResultTable make_psi_table(const PsiVector& v, const std::string& tau_at) {
    ResultTable t;
    t.kind = "psi";
    t.sizes.emplace_back("N", v.N);
    t.command = "psi --size " + std::to_string(v.N);
    if (!tau_at.empty()) t.command += " --tau-at " + tau_at;
    t.engine = engine_version();
    Int point = tau_at.empty() ? Int(0) : Int(tau_at);
    for (size_t i = 0; i < v.index.size(); ++i) {
        const LinkPattern& pi = v.index[i];
        const TauPoly& p = v.components[i];
        Record r;
        r.put("pattern", longs(pi.pairing()));
        r.put("openings", longs(pi.openings()));
        r.put("closings", longs(pi.closings()));
        r.put("boxes", static_cast<long>(pi.box_count()));
        r.put("valuation", static_cast<long>(p.valuation()));
        r.put("degree", static_cast<long>(p.degree()));
        r.put("coeffs", coeff_strings(p));
        r.put("text", p.str());
        r.put("at_one", p.eval(1).get_str());
        if (!tau_at.empty()) r.put("value", p.eval(point).get_str());
        t.rows.push_back(std::move(r));
    }
    return t;
}

ResultTable make_sumrule_table(const SumRuleReport& rep, const std::string& t_spec) {
    ResultTable t;
    t.kind = "sumrule";
    t.sizes.emplace_back("n", rep.n);
    const char* parity = rep.parity == Parity::Even ? "even" : "odd";
    t.command = "sumrule --n " + std::to_string(rep.n) + " --parity " + parity +
                " --t " + t_spec;
    t.engine = engine_version();

    auto route_row = [&](const char* name, const BiPoly& p) {
        Record r;
        r.put("route", std::string(name));
        r.put("grid", grid_strings(p));
        r.put("text", p.str());
        r.put("at_one", p.eval(1, 1).get_str());
        t.rows.push_back(std::move(r));
    };
    route_row("direct", rep.direct);
    route_row("determinant", rep.determinant);
    {
        Record r;
        r.put("convention", rep.convention_map);
        t.rows.push_back(std::move(r));
    }

    auto spec_row = [&](const std::string& label, const TauPoly& p) {
        Record r;
        r.put("specialization", label);
        r.put("coeffs", coeff_strings(p));
        r.put("text", p.str());
        r.put("at_one", p.eval(1).get_str());
        t.rows.push_back(std::move(r));
    };
    if (t_spec == "symbolic") {
        for (const auto& [label, p] : rep.specializations) spec_row(label, p);
    } else {
        std::string label = t_spec == "0"         ? "t=0"
                            : t_spec == "1"       ? "t=1"
                            : t_spec == "inf"     ? "top-t"
                            : t_spec == "tau"     ? "t=tau"
                            : t_spec == "inv-tau" ? "t=1/tau"
                                                  : "";
        if (label.empty()) throw std::runtime_error("unknown t substitution '" + t_spec + "'");
        auto it = rep.specializations.find(label);
        if (it != rep.specializations.end()) {
            spec_row(label, it->second);
        } else {
            try {
                TauPoly p = label == "t=0"     ? rep.direct.at_t_zero()
                            : label == "t=1"   ? rep.direct.at_t_one()
                            : label == "top-t" ? rep.direct.leading_t_coeff()
                            : label == "t=tau" ? rep.direct.at_t_tau()
                                               : rep.direct.at_t_inv_tau();
                spec_row(label, p);
            } catch (const std::exception&) {
                Record r;
                r.put("specialization", label);
                r.put("text", std::string("undefined at this substitution"));
                t.rows.push_back(std::move(r));
            }
        }
    }
    return t;
}

ResultTable make_verify_table(const VerifyReport& rep, int max_n,
                              const std::vector<std::string>& requested) {
    ResultTable t;
    t.kind = "verify-report";
    t.sizes.emplace_back("max_n", max_n);
    t.command = "verify --max-n " + std::to_string(max_n);
    for (const auto& s : requested) t.command += " --suite " + s;
    t.engine = engine_version();
    for (const auto& [suite, results] : rep.suites)
        for (const auto& r : results) {
            Record rec;
            rec.put("suite", suite);
            rec.put("check", r.name);
            rec.put("status", std::string(r.ok ? "pass" : "fail"));
            rec.put("detail", r.detail);
            t.rows.push_back(std::move(rec));
        }
    return t;
}

ResultTable make_matrix_table(const BasisMatrix& C) {
    ResultTable t;
    t.kind = "matrix";
    t.sizes.emplace_back("n", C.n);
    t.command = "basis --n " + std::to_string(C.n);
    t.engine = engine_version();
    for (size_t r = 0; r < C.index.size(); ++r) {
        Record rec;
        rec.put("pattern", longs(C.index[r].pairing()));
        rec.put("openings", longs(C.index[r].openings()));
        std::vector<std::vector<std::string>> entries;
        entries.reserve(C.index.size());
        for (size_t c = 0; c < C.index.size(); ++c)
            entries.push_back(coeff_strings(C.entries[r][c]));
        rec.put("entries", std::move(entries));
        t.rows.push_back(std::move(rec));
    }
    return t;
}

}
