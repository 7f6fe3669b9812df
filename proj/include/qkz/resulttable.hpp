#pragma once
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qkz/bipoly.hpp"
#include "qkz/taupoly.hpp"

namespace qkz {

// One field of a result row. Integer lists carry pattern pairings and index
// sequences; string lists carry polynomial coefficients (decimal, constant
// term first); grids carry bivariate coefficients, one row per power of t.
using Cell = std::variant<long, std::string, std::vector<long>,
                          std::vector<std::string>,
                          std::vector<std::vector<std::string>>>;

// Ordered key/value record. Keys are unique; put() on an existing key
// replaces the value in place. Empty lists normalize to the integer kind so
// a serialization round trip reproduces the record exactly.
struct Record {
    std::vector<std::pair<std::string, Cell>> fields;

    void put(const std::string& key, Cell v);
    const Cell* find(const std::string& key) const;
    bool operator==(const Record& o) const { return fields == o.fields; }
};

// Self-describing container behind every machine-readable emission.
// kind is one of "psi", "sumrule", "matrix", "verify-report". command holds
// the canonical invocation with execution-only flags stripped, so the bytes
// never depend on worker counts or output format.
struct ResultTable {
    int schema_version = 1;
    std::string kind;
    std::vector<std::pair<std::string, long>> sizes;
    std::string command;
    std::string engine;
    std::vector<Record> rows;

    bool operator==(const ResultTable& o) const {
        return schema_version == o.schema_version && kind == o.kind &&
               sizes == o.sizes && command == o.command && engine == o.engine &&
               rows == o.rows;
    }
};

std::string engine_version();

// Canonical serialization: compact single-line JSON plus a trailing newline,
// field order preserved. from_json throws std::runtime_error on malformed
// text, unknown kinds, or value shapes outside the Cell repertoire.
std::string to_json(const ResultTable& t);
ResultTable from_json(const std::string& text);

// Flat views. CSV needs every row to carry the same keys in the same order;
// lists are joined with ';' and grid rows with '|'.
std::string to_csv(const ResultTable& t);
std::string to_pretty(const ResultTable& t);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string table_hash(const ResultTable& t);

// Polynomial encodings used by the emitters: decimal strings with the
// constant term first; the zero polynomial is a single "0". Grids are padded
// to a rectangle with "0".
std::vector<std::string> coeff_strings(const TauPoly& p);
std::vector<std::vector<std::string>> grid_strings(const BiPoly& p);
TauPoly tau_from_strings(const std::vector<std::string>& v);
BiPoly bipoly_from_grid(const std::vector<std::vector<std::string>>& g);

// Atomic file drop: writes a sibling temporary then renames it over the
// target, so readers only ever see complete files.
void write_text_atomic(const std::string& path, const std::string& text);
std::optional<std::string> read_text_file(const std::string& path);

struct PsiVector;
struct SumRuleReport;
struct VerifyReport;
struct BasisMatrix;

// Domain objects rendered into tables, shared by the command line tool and
// the python bindings so every consumer sees identical bytes. tau_at is a
// decimal integer ("" for none); t_spec is one of symbolic, 0, 1, inf, tau,
// inv-tau.
ResultTable make_psi_table(const PsiVector& v, const std::string& tau_at = "");
ResultTable make_sumrule_table(const SumRuleReport& rep, const std::string& t_spec);
ResultTable make_verify_table(const VerifyReport& rep, int max_n,
                              const std::vector<std::string>& requested);
ResultTable make_matrix_table(const BasisMatrix& C);

}
