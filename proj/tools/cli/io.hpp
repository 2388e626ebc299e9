#ifndef TRUCKDRONE_CLI_IO_HPP
#define TRUCKDRONE_CLI_IO_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "truckdrone/generators.hpp"
#include "truckdrone/model.hpp"
#include "truckdrone/proper.hpp"

namespace truckdrone::cli {

/// Malformed or schema-violating input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical text forms. Field order is fixed and every number is written
// with 17 significant digits, so parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);
std::string serialize_schedule(const Schedule& sched);

Instance parse_instance(std::string_view text);
Schedule parse_schedule(std::string_view text);

std::string report_json(const FeasibilityReport& report,
                        std::span<const std::size_t> return_mismatches = {});
std::string report_json(const ProperReport& report);
std::string certificate_json(const TightnessCertificate& cert);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace truckdrone::cli

#endif  // TRUCKDRONE_CLI_IO_HPP
