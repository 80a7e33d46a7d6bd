#include "hs/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hs/parse.hpp"

namespace hs {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j) {
    return Complex{j.at("re").get<double>(), j.at("im").get<double>()};
}

json sequence_to_json(const std::vector<Complex>& seq) {
    json out = json::array();
    for (Complex z : seq) out.push_back(complex_to_json(z));
    return out;
}

std::vector<Complex> sequence_from_json(const json& j) {
    std::vector<Complex> out;
    for (const json& item : j) out.push_back(complex_from_json(item));
    return out;
}

std::vector<Complex> head(const std::vector<Complex>& seq, std::size_t n) {
    return {seq.begin(), seq.begin() + std::min(n, seq.size())};
}

std::string num(double value) {
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

}  // namespace

ReportDoc make_doc(const ObstructionReport& report) {
    ReportDoc doc;
    doc.a = report.consts.a;
    doc.depth = report.depth_used;
    doc.rho = report.consts.rho;
    doc.rho_tilde = report.consts.rho_tilde;
    doc.c0_abs = report.consts.c0_abs;
    doc.c_seq = head(report.c_seq, 8);
    doc.delta_seq = head(report.delta_seq, 8);
    doc.b_seq = head(report.b_seq, 8);
    doc.h0_sq = report.h0_norm_sq;
    doc.f_actual = report.f_norm2_actual;
    doc.f_required = report.f_norm2_required;
    doc.gap = report.gap;
    doc.erratum_notes = report.erratum_notes;
    for (const ObstructionCheck& c : report.checks)
        doc.checks.push_back({c.name, c.delta, c.tol, c.pass});
    return doc;
}

json doc_to_json(const ReportDoc& doc) {
    json checks = json::array();
    for (const ReportDoc::Check& c : doc.checks)
        checks.push_back(json{{"name", c.name}, {"delta", c.delta}, {"tol", c.tol},
                              {"pass", c.pass}});
    return json{
        {"schema", doc.schema},
        {"a", complex_to_json(doc.a)},
        {"depth", doc.depth},
        {"constants", json{{"rho", complex_to_json(doc.rho)},
                           {"rho_tilde", complex_to_json(doc.rho_tilde)},
                           {"c0_abs", doc.c0_abs}}},
        {"sequences", json{{"c", sequence_to_json(doc.c_seq)},
                           {"delta", sequence_to_json(doc.delta_seq)},
                           {"b", sequence_to_json(doc.b_seq)}}},
        {"norms", json{{"h0_sq", doc.h0_sq},
                       {"f_actual", doc.f_actual},
                       {"f_required", doc.f_required}}},
        {"gap", doc.gap},
        {"erratum_notes", doc.erratum_notes},
        {"checks", checks},
    };
}

ReportDoc doc_from_json(const json& j) {
    ReportDoc doc;
    doc.schema = j.at("schema").get<std::string>();
    doc.a = complex_from_json(j.at("a"));
    doc.depth = j.at("depth").get<int>();
    doc.rho = complex_from_json(j.at("constants").at("rho"));
    doc.rho_tilde = complex_from_json(j.at("constants").at("rho_tilde"));
    doc.c0_abs = j.at("constants").at("c0_abs").get<double>();
    doc.c_seq = sequence_from_json(j.at("sequences").at("c"));
    doc.delta_seq = sequence_from_json(j.at("sequences").at("delta"));
    doc.b_seq = sequence_from_json(j.at("sequences").at("b"));
    doc.h0_sq = j.at("norms").at("h0_sq").get<double>();
    doc.f_actual = j.at("norms").at("f_actual").get<double>();
    doc.f_required = j.at("norms").at("f_required").get<double>();
    doc.gap = j.at("gap").get<double>();
    for (const json& note : j.at("erratum_notes"))
        doc.erratum_notes.push_back(note.get<std::string>());
    for (const json& c : j.at("checks"))
        doc.checks.push_back({c.at("name").get<std::string>(), c.at("delta").get<double>(),
                              c.at("tol").get<double>(), c.at("pass").get<bool>()});
    return doc;
}

std::string render_report_text(const ObstructionReport& report) {
    std::ostringstream out;
    out << std::setprecision(17);
    auto line = [&out](const char* key, const std::string& value) {
        out << std::left << std::setw(22) << key << value << "\n";
    };
    line("schema", kSchemaVersion);
    line("a", format_complex(report.consts.a));
    line("depth", std::to_string(report.depth_used));
    line("rho", format_complex(report.consts.rho));
    line("rho_tilde", format_complex(report.consts.rho_tilde));
    line("|c0|", num(report.consts.c0_abs));
    auto seq_line = [&](const char* key, const std::vector<Complex>& seq) {
        std::ostringstream s;
        for (std::size_t i = 0; i < std::min<std::size_t>(8, seq.size()); ++i) {
            if (i) s << ", ";
            s << format_complex(seq[i]);
        }
        line(key, s.str());
    };
    seq_line("c[0..7]", report.c_seq);
    seq_line("delta[0..7]", report.delta_seq);
    seq_line("b[0..7]", report.b_seq);
    line("gamma1", format_complex(report.gamma1));
    line("gamma2", format_complex(report.gamma2));
    line("beta1", format_complex(report.beta1));
    line("beta2", format_complex(report.beta2));
    line("beta3", format_complex(report.beta3));
    line("h0_sq", num(report.h0_norm_sq));
    line("h1_part_sq", num(report.h1_part_norm_sq));
    line("f_actual", num(report.f_norm2_actual));
    line("f_required", num(report.f_norm2_required));
    line("gap", num(report.gap));
    line("verdict", to_string(report.verdict.kind));
    line("evidence", report.verdict.evidence);
    out << "checks:\n";
    for (const ObstructionCheck& c : report.checks)
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << std::left << std::setw(30) << c.name
            << " delta=" << c.delta << " tol=" << c.tol << "\n";
    out << "notes:\n";
    for (const std::string& note : report.erratum_notes) out << "  - " << note << "\n";
    return out.str();
}

std::string csv_header() {
    return "abs_a,arg_a,actual,required,gap,max_crosscheck_delta,status";
}

std::string csv_line(const SweepRow& row) {
    std::ostringstream out;
    out << std::setprecision(17);
    auto field = [&out](const std::optional<double>& v) {
        out << ",";
        if (v) out << *v;
    };
    out << row.abs_a << "," << row.arg_a;
    field(row.actual);
    field(row.required);
    field(row.gap);
    field(row.max_delta);
    out << "," << row.status;
    return out.str();
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& row : rows) {
        json r{{"abs_a", row.abs_a}, {"arg_a", row.arg_a}, {"status", row.status}};
        if (row.actual) r["actual"] = *row.actual;
        if (row.required) r["required"] = *row.required;
        if (row.gap) r["gap"] = *row.gap;
        if (row.max_delta) r["max_crosscheck_delta"] = *row.max_delta;
        arr.push_back(std::move(r));
    }
    return json{{"schema", kSchemaVersion}, {"rows", arr}};
}

std::string render_sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << std::left << std::setw(10) << "abs_a" << std::setw(12) << "arg_a" << std::setw(18)
        << "actual" << std::setw(18) << "required" << std::setw(18) << "gap" << std::setw(14)
        << "max_delta" << "status\n";
    for (const SweepRow& row : rows) {
        out << std::left << std::setw(10) << row.abs_a << std::setw(12) << row.arg_a;
        auto field = [&out](const std::optional<double>& v, int width) {
            if (v)
                out << std::setw(width) << *v;
            else
                out << std::setw(width) << "-";
        };
        field(row.actual, 18);
        field(row.required, 18);
        field(row.gap, 18);
        field(row.max_delta, 14);
        out << row.status << "\n";
    }
    return out.str();
}

SweepRow row_from_report(const ObstructionReport& report) {
    SweepRow row;
    row.abs_a = std::abs(report.consts.a);
    row.arg_a = std::arg(report.consts.a);
    row.actual = report.f_norm2_actual;
    row.required = report.f_norm2_required;
    row.gap = report.gap;
    row.max_delta = report.max_check_delta;
    row.status = report.all_checks_pass ? "ok" : "check_failed";
    return row;
}

json classify_to_json(const AutoClass& cls, const SymmetryVerdict& v) {
    json out{{"schema", kSchemaVersion}, {"kind", to_string(cls.kind)}};
    if (cls.fixed_point_in_disk) out["fixed_point"] = complex_to_json(*cls.fixed_point_in_disk);
    if (cls.multiplier) out["multiplier"] = complex_to_json(*cls.multiplier);
    if (cls.boundary_fixed_points) {
        out["boundary_fixed_points"] = json::array(
            {complex_to_json(cls.boundary_fixed_points->first),
             complex_to_json(cls.boundary_fixed_points->second)});
    }
    if (cls.kind == AutoKind::Elliptic) {
        const EllipticData data = elliptic_data(cls);
        if (data.order)
            out["order"] = *data.order;
        else
            out["order"] = json();  // no order <= search cap
    }
    json verdict_json{{"kind", to_string(v.kind)}, {"evidence", v.evidence}};
    if (v.gap) verdict_json["gap"] = *v.gap;
    out["verdict"] = verdict_json;
    return out;
}

std::string render_classify_text(const AutoClass& cls, const SymmetryVerdict& v) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "kind        " << to_string(cls.kind) << "\n";
    if (cls.fixed_point_in_disk)
        out << "fixed_point " << format_complex(*cls.fixed_point_in_disk) << "\n";
    if (cls.multiplier) out << "multiplier  " << format_complex(*cls.multiplier) << "\n";
    if (cls.boundary_fixed_points)
        out << "boundary    " << format_complex(cls.boundary_fixed_points->first) << "  "
            << format_complex(cls.boundary_fixed_points->second) << "\n";
    if (cls.kind == AutoKind::Elliptic) {
        const EllipticData data = elliptic_data(cls);
        if (data.order)
            out << "order       " << *data.order << "\n";
        else
            out << "order       none <= " << kOrderSearchCap << "\n";
    }
    out << "verdict     " << to_string(v.kind) << "\n";
    out << "evidence    " << v.evidence << "\n";
    if (v.gap) out << "gap         " << num(*v.gap) << "\n";
    return out.str();
}

}  // namespace hs
