#ifndef QGAME_REPORT_IO_HPP
#define QGAME_REPORT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgame/half_integer.hpp"
#include "qgame/scenario.hpp"
#include "qgame/scenario_file.hpp"

namespace qgame {

enum class OutputFormat { text, json, csv };

OutputFormat output_format_from_string(const std::string& name);

/// 17-significant-digit round-trip formatting; the one number formatter
/// every report goes through, so identical inputs yield byte-identical
/// output.
std::string format_double(double x);

/// Everything cmd_run emits: the measurement plus optional check results.
struct RunDocument {
    std::string algebra;
    MeasurementReport measurement;
    std::optional<VerificationReport> checks;
    OutputSelection outputs;
};

std::string render_run(const RunDocument& doc, OutputFormat format);

std::string render_verification(const std::string& algebra,
                                const VerificationReport& report,
                                OutputFormat format);

std::string render_spectrum(const std::string& algebra,
                            const std::string& operator_name,
                            const RealVector& values, OutputFormat format);

std::string render_classical_limit(
    const std::vector<std::pair<HalfInteger, double>>& rows,
    OutputFormat format);

} // namespace qgame

#endif
