#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hs/moebius.hpp"
#include "hs/obstruction.hpp"

namespace hs {

inline constexpr const char* kSchemaVersion = "hs-1";

/// Serializable view of an obstruction report; the wire schema.
struct ReportDoc {
    std::string schema = kSchemaVersion;
    Complex a{};
    int depth = 0;
    Complex rho{}, rho_tilde{};
    double c0_abs = 0.0;
    std::vector<Complex> c_seq, delta_seq, b_seq;  // first 8 terms each
    double h0_sq = 0.0;
    double f_actual = 0.0;
    double f_required = 0.0;
    double gap = 0.0;
    std::vector<std::string> erratum_notes;
    struct Check {
        std::string name;
        double delta = 0.0;
        double tol = 0.0;
        bool pass = false;
        bool operator==(const Check&) const = default;
    };
    std::vector<Check> checks;

    bool operator==(const ReportDoc&) const = default;
};

ReportDoc make_doc(const ObstructionReport& report);
nlohmann::json doc_to_json(const ReportDoc& doc);
ReportDoc doc_from_json(const nlohmann::json& j);
std::string render_report_text(const ObstructionReport& report);

struct SweepRow {
    double abs_a = 0.0;
    double arg_a = 0.0;
    std::optional<double> actual, required, gap, max_delta;
    std::string status = "ok";
};

std::string csv_header();
std::string csv_line(const SweepRow& row);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);
std::string render_sweep_text(const std::vector<SweepRow>& rows);
SweepRow row_from_report(const ObstructionReport& report);

nlohmann::json classify_to_json(const AutoClass& cls, const SymmetryVerdict& v);
std::string render_classify_text(const AutoClass& cls, const SymmetryVerdict& v);

}  // namespace hs
