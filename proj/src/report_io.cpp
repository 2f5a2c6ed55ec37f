#include "qgame/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "qgame/version.hpp"

namespace qgame {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

/// Minimal ordered JSON emitter. Reports have a fixed, flat schema; an
/// explicit writer keeps number formatting under format_double's control.
class JsonWriter {
public:
    void begin_object() { sep(); out_ += '{'; stack_.push_back(true); }
    void end_object() { out_ += '}'; stack_.pop_back(); fresh_ = false; }
    void begin_array() { sep(); out_ += '['; stack_.push_back(true); }
    void end_array() { out_ += ']'; stack_.pop_back(); fresh_ = false; }

    void key(const std::string& k) {
        sep();
        out_ += '"';
        out_ += json_escape(k);
        out_ += "\":";
        fresh_ = true;
    }

    void string(const std::string& v) {
        sep();
        out_ += '"';
        out_ += json_escape(v);
        out_ += '"';
    }
    void number(double v) { sep(); out_ += format_double(v); }
    void integer(long long v) { sep(); out_ += std::to_string(v); }
    void boolean(bool v) { sep(); out_ += v ? "true" : "false"; }
    void null() { sep(); out_ += "null"; }

    std::string str() const { return out_; }

private:
    void sep() {
        if (fresh_) {
            fresh_ = false;
            return;
        }
        if (!out_.empty() && out_.back() != '{' && out_.back() != '[') {
            out_ += ',';
        }
    }

    std::string out_;
    std::vector<bool> stack_;
    bool fresh_ = false;
};

void json_optional_number(JsonWriter& w, const std::optional<double>& v) {
    if (v) {
        w.number(*v);
    } else {
        w.null();
    }
}

std::string render_run_text(const RunDocument& doc) {
    std::ostringstream os;
    os << "qgame " << kVersion << "\n";
    os << "algebra: " << doc.algebra << "\n";
    const auto& ctx = doc.measurement.context;
    os << "space: " << ctx.space << "  dim: " << ctx.dim << "\n";
    os << "tolerance: " << format_double(ctx.tolerance) << "\n";
    if (ctx.truncated_space) {
        os << "boundary_leak: " << format_double(ctx.boundary_leak) << "\n";
    }
    const auto& sel = doc.outputs;
    os << "operators:\n";
    for (const auto& op : doc.measurement.operators) {
        os << "  " << op.name;
        if (sel.expectation) {
            os << "  expectation=" << format_double(op.expectation);
        }
        if (sel.variance) os << "  variance=" << format_double(op.variance);
        if (op.normal_order_shift) {
            os << "  normal_order_shift=" << format_double(*op.normal_order_shift);
        }
        os << "\n";
        if (sel.spectral_table && op.spectral_table) {
            for (const auto& [value, prob] : *op.spectral_table) {
                os << "    eigenvalue=" << format_double(value)
                   << "  probability=" << format_double(prob) << "\n";
            }
        }
    }
    const bool any_pair = sel.covariance || sel.correlation ||
                          sel.commutator_expectation ||
                          sel.uncertainty_product || sel.robertson_bound;
    if (any_pair && !doc.measurement.pairs.empty()) {
        os << "pairs:\n";
        for (const auto& pair : doc.measurement.pairs) {
            os << "  " << pair.a << ":" << pair.b;
            if (sel.covariance) {
                os << "  covariance=" << format_double(pair.covariance);
            }
            if (sel.correlation) {
                os << "  correlation="
                   << (pair.correlation ? format_double(*pair.correlation)
                                        : std::string("undefined"));
            }
            if (sel.commutator_expectation) {
                os << "  commutator_expectation="
                   << format_double(pair.commutator_expectation);
            }
            if (sel.uncertainty_product) {
                os << "  uncertainty_product="
                   << format_double(pair.uncertainty_product);
            }
            if (sel.robertson_bound) {
                os << "  robertson_bound=" << format_double(pair.robertson_bound);
            }
            os << "\n";
        }
    }
    if (doc.checks) {
        os << "checks:\n";
        for (const auto& rel : doc.checks->relations) {
            os << "  " << rel.text << "  residual="
               << format_double(rel.residual) << "  "
               << (rel.pass ? "pass" : "FAIL") << "\n";
        }
        os << "worst_residual: " << format_double(doc.checks->worst)
           << "  (tol " << format_double(doc.checks->tol) << ")\n";
    }
    return os.str();
}

std::string render_run_json(const RunDocument& doc) {
    const auto& sel = doc.outputs;
    JsonWriter w;
    w.begin_object();
    w.key("algebra");
    w.string(doc.algebra);
    w.key("context");
    w.begin_object();
    w.key("space");
    w.string(doc.measurement.context.space);
    w.key("dim");
    w.integer(doc.measurement.context.dim);
    w.key("tolerance");
    w.number(doc.measurement.context.tolerance);
    w.key("boundary_leak");
    w.number(doc.measurement.context.boundary_leak);
    w.key("truncated_space");
    w.boolean(doc.measurement.context.truncated_space);
    w.end_object();

    w.key("operators");
    w.begin_array();
    for (const auto& op : doc.measurement.operators) {
        w.begin_object();
        w.key("name");
        w.string(op.name);
        if (sel.expectation) {
            w.key("expectation");
            w.number(op.expectation);
        }
        if (sel.variance) {
            w.key("variance");
            w.number(op.variance);
        }
        if (op.normal_order_shift) {
            w.key("normal_order_shift");
            w.number(*op.normal_order_shift);
        }
        if (sel.spectral_table && op.spectral_table) {
            w.key("spectral_table");
            w.begin_array();
            for (const auto& [value, prob] : *op.spectral_table) {
                w.begin_object();
                w.key("eigenvalue");
                w.number(value);
                w.key("probability");
                w.number(prob);
                w.end_object();
            }
            w.end_array();
        }
        w.end_object();
    }
    w.end_array();

    w.key("pairs");
    w.begin_array();
    for (const auto& pair : doc.measurement.pairs) {
        w.begin_object();
        w.key("a");
        w.string(pair.a);
        w.key("b");
        w.string(pair.b);
        if (sel.covariance) {
            w.key("covariance");
            w.number(pair.covariance);
        }
        if (sel.correlation) {
            w.key("correlation");
            json_optional_number(w, pair.correlation);
        }
        if (sel.commutator_expectation) {
            w.key("commutator_expectation");
            w.number(pair.commutator_expectation);
        }
        if (sel.uncertainty_product) {
            w.key("uncertainty_product");
            w.number(pair.uncertainty_product);
        }
        if (sel.robertson_bound) {
            w.key("robertson_bound");
            w.number(pair.robertson_bound);
        }
        w.end_object();
    }
    w.end_array();

    if (doc.checks) {
        w.key("checks");
        w.begin_array();
        for (const auto& rel : doc.checks->relations) {
            w.begin_object();
            w.key("relation");
            w.string(rel.text);
            w.key("residual");
            w.number(rel.residual);
            w.key("pass");
            w.boolean(rel.pass);
            w.end_object();
        }
        w.end_array();
        w.key("worst_residual");
        w.number(doc.checks->worst);
        w.key("all_pass");
        w.boolean(doc.checks->all_pass);
    }
    w.end_object();
    std::string out = w.str();
    out += '\n';
    return out;
}

std::string render_run_csv(const RunDocument& doc) {
    const auto& sel = doc.outputs;
    std::ostringstream os;
    os << "kind,name_a,name_b,expectation,variance,covariance,correlation,"
          "commutator_expectation,uncertainty_product,robertson_bound\n";
    for (const auto& op : doc.measurement.operators) {
        os << "operator," << csv_field(op.name) << ",";
        os << "," << (sel.expectation ? format_double(op.expectation) : "");
        os << "," << (sel.variance ? format_double(op.variance) : "");
        os << ",,,,,\n";
    }
    for (const auto& pair : doc.measurement.pairs) {
        os << "pair," << csv_field(pair.a) << "," << csv_field(pair.b);
        os << ",,";
        os << "," << (sel.covariance ? format_double(pair.covariance) : "");
        os << ",";
        if (sel.correlation && pair.correlation) {
            os << format_double(*pair.correlation);
        }
        os << ","
           << (sel.commutator_expectation
                   ? format_double(pair.commutator_expectation)
                   : "");
        os << ","
           << (sel.uncertainty_product
                   ? format_double(pair.uncertainty_product)
                   : "");
        os << ","
           << (sel.robertson_bound ? format_double(pair.robertson_bound) : "");
        os << "\n";
    }
    return os.str();
}

} // namespace

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw ParseError("unknown format \"" + name +
                     "\" (expected text, json, csv)");
}

std::string format_double(double x) {
    if (x == 0.0) return "0"; // merge -0 with 0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string render_run(const RunDocument& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return render_run_text(doc);
        case OutputFormat::json: return render_run_json(doc);
        case OutputFormat::csv: return render_run_csv(doc);
    }
    return {};
}

std::string render_verification(const std::string& algebra,
                                const VerificationReport& report,
                                OutputFormat format) {
    if (format == OutputFormat::text) {
        std::ostringstream os;
        os << "qgame " << kVersion << "\n";
        os << "algebra: " << algebra << "\n";
        for (const auto& rel : report.relations) {
            os << "  " << rel.text << "  residual="
               << format_double(rel.residual) << "  "
               << (rel.pass ? "pass" : "FAIL") << "\n";
        }
        os << "worst_residual: " << format_double(report.worst) << "  (tol "
           << format_double(report.tol) << ")\n";
        os << (report.all_pass ? "all relations pass\n"
                               : "some relations FAIL\n");
        return os.str();
    }
    if (format == OutputFormat::json) {
        JsonWriter w;
        w.begin_object();
        w.key("algebra");
        w.string(algebra);
        w.key("tol");
        w.number(report.tol);
        w.key("relations");
        w.begin_array();
        for (const auto& rel : report.relations) {
            w.begin_object();
            w.key("relation");
            w.string(rel.text);
            w.key("residual");
            w.number(rel.residual);
            w.key("pass");
            w.boolean(rel.pass);
            w.end_object();
        }
        w.end_array();
        w.key("worst_residual");
        w.number(report.worst);
        w.key("all_pass");
        w.boolean(report.all_pass);
        w.end_object();
        return w.str() + "\n";
    }
    std::ostringstream os;
    os << "relation,residual,pass\n";
    for (const auto& rel : report.relations) {
        os << csv_field(rel.text) << "," << format_double(rel.residual) << ","
           << (rel.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string render_spectrum(const std::string& algebra,
                            const std::string& operator_name,
                            const RealVector& values, OutputFormat format) {
    if (format == OutputFormat::text) {
        std::ostringstream os;
        for (Eigen::Index i = 0; i < values.size(); ++i) {
            if (i) os << " ";
            os << format_double(values[i]);
        }
        os << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        JsonWriter w;
        w.begin_object();
        w.key("algebra");
        w.string(algebra);
        w.key("operator");
        w.string(operator_name);
        w.key("eigenvalues");
        w.begin_array();
        for (Eigen::Index i = 0; i < values.size(); ++i) w.number(values[i]);
        w.end_array();
        w.end_object();
        return w.str() + "\n";
    }
    std::ostringstream os;
    os << "eigenvalue\n";
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        os << format_double(values[i]) << "\n";
    }
    return os.str();
}

std::string render_classical_limit(
    const std::vector<std::pair<HalfInteger, double>>& rows,
    OutputFormat format) {
    if (format == OutputFormat::text) {
        std::ostringstream os;
        for (const auto& [kappa, norm] : rows) {
            os << kappa.str() << " " << format_double(norm) << "\n";
        }
        return os.str();
    }
    if (format == OutputFormat::json) {
        JsonWriter w;
        w.begin_object();
        w.key("rows");
        w.begin_array();
        for (const auto& [kappa, norm] : rows) {
            w.begin_object();
            w.key("kappa");
            w.number(kappa.value());
            w.key("scaled_commutator_norm");
            w.number(norm);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        return w.str() + "\n";
    }
    std::ostringstream os;
    os << "kappa,scaled_commutator_norm\n";
    for (const auto& [kappa, norm] : rows) {
        os << format_double(kappa.value()) << "," << format_double(norm)
           << "\n";
    }
    return os.str();
}

} // namespace qgame
