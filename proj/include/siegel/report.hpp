#pragma once

// Verification reports: a flat list of labeled check items with exact
// computed/expected values, serializable as JSON or markdown.
//
// JSON schema:
//
//   {"items": [{"label": ..., "status": "pass"|"fail"|"info",
//               "computed": ..., "expected": ..., "assumptions": [...]}]}
//
// Items are kept sorted by label so emission is deterministic regardless of
// the order checks ran in, and parse(emit(report)) == report holds exactly
// (all payload fields are strings; no floating point enters the format).
//
// Builders turn the library's result records (classification scores, lemma
// checks, case records) into report items.  "info" marks derived data
// attached for context — certificate values, enumeration notes — that is
// not itself a pass/fail check; a report succeeds when every item is pass
// or info.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <siegel/bounds.hpp>
#include <siegel/classify.hpp>

namespace siegel {

enum class ItemStatus { pass, fail, info };

inline const char* to_string(ItemStatus s) {
    switch (s) {
        case ItemStatus::pass: return "pass";
        case ItemStatus::fail: return "fail";
        case ItemStatus::info: return "info";
    }
    return "fail";
}

struct ReportItem {
    std::string label;
    ItemStatus status = ItemStatus::fail;
    std::string computed;
    std::string expected;
    std::vector<std::string> assumptions;

    bool operator==(const ReportItem&) const = default;
};

struct Report {
    std::vector<ReportItem> items;  // sorted by label

    bool all_pass() const {
        return std::all_of(items.begin(), items.end(),
                           [](const ReportItem& it) { return it.status != ItemStatus::fail; });
    }

    bool operator==(const Report&) const = default;
};

inline Report make_report(std::vector<ReportItem> items) {
    std::sort(items.begin(), items.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.label < b.label; });
    return {std::move(items)};
}

inline Report merge_reports(std::vector<Report> reports) {
    std::vector<ReportItem> items;
    for (auto& r : reports)
        for (auto& it : r.items) items.push_back(std::move(it));
    return make_report(std::move(items));
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

// One item per classification entry.  Labels carry a zero-padded index so
// lexicographic order equals table order ("01 (i) B3", ..., "24 (xxiv) ...").
inline Report report_from_classification(const std::vector<ItemScore>& scores) {
    std::vector<ReportItem> items;
    items.reserve(scores.size());
    for (std::size_t idx = 0; idx < scores.size(); ++idx) {
        const auto& sc = scores[idx];
        ReportItem it;
        const std::string pos = std::to_string(idx + 1);
        it.label = (pos.size() < 2 ? "0" + pos : pos) + " (" + sc.entry.item + ") " + sc.entry.canonical;
        it.status = sc.pass ? ItemStatus::pass : ItemStatus::fail;
        it.computed = "d = " + std::to_string(sc.computed.d) + " at n = " + std::to_string(sc.entry.realization.n);
        it.expected = "d = " + std::to_string(sc.entry.expected_d) + " at n = " + std::to_string(sc.entry.n);
        it.assumptions = sc.entry.assumptions;
        items.push_back(std::move(it));
    }
    return make_report(std::move(items));
}

inline Report report_from_lemmas(const std::vector<LemmaCheck>& checks) {
    std::vector<ReportItem> items;
    items.reserve(checks.size());
    for (const auto& c : checks) {
        ReportItem it;
        it.label = c.id;
        it.status = c.pass ? ItemStatus::pass : ItemStatus::fail;
        it.computed = c.detail;
        it.expected = c.description;
        items.push_back(std::move(it));
    }
    return make_report(std::move(items));
}

inline Report report_from_cases(const std::vector<CaseRecord>& records) {
    std::vector<ReportItem> items;
    items.reserve(records.size());
    for (const auto& rec : records) {
        ReportItem it;
        it.label = rec.case_id;
        it.status = rec.ok ? ItemStatus::pass : ItemStatus::fail;
        std::string outcomes;
        for (const auto& out : rec.outcomes) {
            if (!outcomes.empty()) outcomes += "; ";
            outcomes += out.candidate;
            outcomes += out.contributes ? " contributes (" : " excluded (";
            outcomes += out.detail;
            outcomes += ")";
        }
        it.computed = outcomes;
        if (rec.n > 0) {
            it.expected = "n = " + std::to_string(rec.n) + ", k = " + std::to_string(rec.k) + ", d = n^2 - " +
                          std::to_string(rec.theorem == 1 ? 7 : 8) + " = " + std::to_string(rec.target);
        } else {
            it.expected = "k = " + std::to_string(rec.k) + ", all n with d = n^2 - " +
                          std::to_string(rec.theorem == 1 ? 7 : 8);
        }
        it.assumptions = rec.assumptions;
        items.push_back(std::move(it));
    }
    return make_report(std::move(items));
}

// Context item recording why no cases beyond the executed list exist: the
// a-priori exclusion region plus the certificate that it is stable past any
// finite n-cap.
inline ReportItem exclusion_info_item(int theorem, std::size_t ncap) {
    const std::size_t offset = theorem == 1 ? 7 : 8;
    const auto table = exclusion_table(offset, ncap);
    const auto cert = exclusion_tail_certificate(offset);
    ReportItem it;
    it.label = "T" + std::to_string(theorem) + "-exclusions";
    it.status = ItemStatus::info;
    it.computed = std::to_string(table.excluded.size()) + " pairs (n, k) excluded for n <= " +
                  std::to_string(table.ncap) + "; endpoint values turn negative at n = " +
                  std::to_string(cert.first_negative_k3) + " (k = 3), n = " + std::to_string(cert.first_negative_k4) +
                  " (k = 4), n = " + std::to_string(cert.first_negative_kn) + " (k = n)";
    it.expected = "target d = n^2 - " + std::to_string(offset);
    return it;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string emit_report_json(const Report& report) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : report.items)
        items.push_back({{"label", it.label},
                         {"status", to_string(it.status)},
                         {"computed", it.computed},
                         {"expected", it.expected},
                         {"assumptions", it.assumptions}});
    return nlohmann::json{{"items", std::move(items)}}.dump(2);
}

inline Report parse_report(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("report: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("items") || !j.at("items").is_array())
        throw std::runtime_error("report: expected an object with an \"items\" array");
    std::vector<ReportItem> items;
    for (const auto& ij : j.at("items")) {
        ReportItem it;
        it.label = ij.at("label").get<std::string>();
        const std::string status = ij.at("status").get<std::string>();
        if (status == "pass")
            it.status = ItemStatus::pass;
        else if (status == "fail")
            it.status = ItemStatus::fail;
        else if (status == "info")
            it.status = ItemStatus::info;
        else
            throw std::runtime_error("report: unknown status '" + status + "'");
        it.computed = ij.at("computed").get<std::string>();
        it.expected = ij.at("expected").get<std::string>();
        it.assumptions = ij.at("assumptions").get<std::vector<std::string>>();
        items.push_back(std::move(it));
    }
    return make_report(std::move(items));
}

// One section per item, so a report over the theorem/case drivers reads in
// the same order as the case analysis it verifies.
inline std::string emit_report_markdown(const Report& report) {
    std::string out = "# Verification report\n";
    for (const auto& it : report.items) {
        out += "\n## " + it.label + "\n\n";
        out += "- status: " + std::string(to_string(it.status)) + "\n";
        if (!it.computed.empty()) out += "- computed: " + it.computed + "\n";
        if (!it.expected.empty()) out += "- expected: " + it.expected + "\n";
        if (!it.assumptions.empty()) {
            out += "- assumptions:\n";
            for (const auto& a : it.assumptions) out += "  - " + a + "\n";
        }
    }
    return out;
}

// One line per item: the text format printed by command-line verification.
inline std::string emit_report_lines(const Report& report) {
    std::string out;
    for (const auto& it : report.items) {
        out += it.label + ": " + to_string(it.status);
        if (!it.computed.empty()) out += " — " + it.computed;
        if (!it.expected.empty()) out += " [" + it.expected + "]";
        out += "\n";
    }
    return out;
}

}  // namespace siegel
