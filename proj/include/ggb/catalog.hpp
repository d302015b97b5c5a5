#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggb/chern.hpp"
#include "ggb/geom.hpp"
#include "ggb/sheaf.hpp"

namespace ggb {

using json = nlohmann::json;

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Complex description: explicit terms and maps, or a twisted, truncated
/// Koszul complex on a list of forms.
struct ComplexExpr {
    bool koszul = false;
    std::vector<Form> forms;
    int twist = 0;
    std::optional<std::pair<int, int>> trunc;
    FreeComplex explicit_complex;

    FreeComplex build() const;
};

/// Serialized SheafNode expression tree.
struct Expr {
    enum class Tag { Sum, Ker, KerInto, KerFrom, Quot, Twist, Oplus, Dual, Monad, P, Ref };
    Tag tag = Tag::Sum;
    std::vector<int> twists;                  // Sum
    GradedMatrix matrix;                      // Ker, KerInto, KerFrom, Quot
    std::vector<std::shared_ptr<Expr>> kids;  // operands
    int amount = 0;                           // Twist: l, Monad: position
    ComplexExpr complex;                      // Monad
    std::string ref;                          // Ref: id of an earlier entry
};

Expr parse_expr(const json& j, int n);
json to_json(const Expr& e);
using RefResolver = std::function<NodePtr(const std::string&)>;
NodePtr build_node(const Expr& e, int n, const RefResolver& refs = {});

GradedMatrix parse_matrix(const json& j, int nvars);
json to_json(const GradedMatrix& m);
FreeComplex parse_complex_json(const json& j, int nvars);
json to_json(const FreeComplex& c);

enum class GGExpect { None, Generated, NotGenerated, GeneratedForInstance };

struct ExpectedCell {
    int i = 0, l = 0, h = 0;
    std::string tag;     // PAPER, DERIVED, TRIVIAL
    std::string anchor;  // where the value comes from
};

struct ExpectedSplit {
    std::vector<Form> line;  // linear equations
    std::vector<int> type;   // nonincreasing
};

struct CatalogEntry {
    std::string id;
    int n = 0;
    Expr node;
    std::optional<ChernVector> chern;
    std::vector<ExpectedCell> cells;
    GGExpect gg = GGExpect::None;
    std::vector<std::vector<Form>> gg_hint_lines;
    std::vector<ExpectedSplit> splits;
    bool dual_vanishing = false;  // h^0 and h^1 of the dual vanish
    std::optional<std::pair<int, int>> window;
    std::string notes;

    json raw;                 // as read
    std::string parse_error;  // nonempty when the entry did not parse
};

struct Catalog {
    std::vector<CatalogEntry> entries;
};

Catalog parse_catalog(const json& j);
Catalog load_catalog(const std::string& path);  // throws CatalogError when unreadable
json to_json(const CatalogEntry& e);
json to_json(const Catalog& c);

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 500;
    int threads = 0;  // 0: hardware concurrency
};

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string expected;
    std::string got;
    std::string anchor;
};

struct EntryReport {
    std::string id;
    std::uint64_t seed = 0;
    double seconds = 0;
    std::string error;  // parse or construction failure
    std::vector<CheckResult> checks;
    bool ok() const;
};

struct VerifyReport {
    std::vector<EntryReport> entries;  // ordered by id
    std::uint64_t seed = 0;
    bool ok() const;
    int failures() const;
    json to_json() const;
    std::string text() const;
};

EntryReport verify_entry(const CatalogEntry& e, const Catalog& cat, const VerifyOptions& opt = {});
VerifyReport verify_all(const Catalog& cat, const VerifyOptions& opt = {});

}  // namespace ggb
