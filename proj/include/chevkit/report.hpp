#ifndef CHEVKIT_REPORT_HPP
#define CHEVKIT_REPORT_HPP

// Rendering of derivation reports: plain table rows, CSV, and JSON records.

#include <chevkit/derivations.hpp>

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace chevkit {

/// "g2 2 14 0 14 21 no"
inline std::string table_row(const DerivationReport& r)
{
  std::ostringstream os;
  os << kind_name(r.algebra) << ' ' << r.p << ' ' << r.dim_L << ' ' << r.dim_Z << ' ' << r.dim_ad << ' ' << r.dim_Der
     << ' ' << (r.inner ? "yes" : "no");
  return os.str();
}

inline constexpr std::string_view csv_header = "L,char,dim,Z(L),ad(L),Der(L),inner";

inline std::string csv_row(const DerivationReport& r)
{
  std::ostringstream os;
  os << kind_name(r.algebra) << ',' << r.p << ',' << r.dim_L << ',' << r.dim_Z << ',' << r.dim_ad << ',' << r.dim_Der
     << ',' << (r.inner ? "yes" : "no");
  return os.str();
}

inline void to_json(nlohmann::json& j, const DerivationReport& r)
{
  j = nlohmann::json{{"algebra", kind_name(r.algebra)},
                     {"char", r.p},
                     {"dim", r.dim_L},
                     {"dim_Z", r.dim_Z},
                     {"dim_H", r.dim_H},
                     {"dim_ad", r.dim_ad},
                     {"dim_V", r.dim_V ? nlohmann::json(*r.dim_V) : nlohmann::json(nullptr)},
                     {"dim_Der", r.dim_Der},
                     {"inner", r.inner},
                     {"method", method_name(r.method)}};
}

inline void from_json(const nlohmann::json& j, DerivationReport& r)
{
  r.algebra = parse_kind(j.at("algebra").get<std::string>());
  r.p = j.at("char").get<std::uint32_t>();
  r.dim_L = j.at("dim").get<std::size_t>();
  r.dim_Z = j.at("dim_Z").get<std::size_t>();
  r.dim_H = j.at("dim_H").get<std::size_t>();
  r.dim_ad = j.at("dim_ad").get<std::size_t>();
  if (j.at("dim_V").is_null())
    r.dim_V.reset();
  else
    r.dim_V = j.at("dim_V").get<std::size_t>();
  r.dim_Der = j.at("dim_Der").get<std::size_t>();
  r.inner = j.at("inner").get<bool>();
  r.method = parse_method(j.at("method").get<std::string>());
}

enum class OutputFormat { Table, Json, Csv };

inline void write_reports(std::ostream& os, const std::vector<DerivationReport>& reports, OutputFormat format)
{
  switch (format) {
    case OutputFormat::Table:
      for (const auto& r : reports) os << table_row(r) << '\n';
      break;
    case OutputFormat::Csv:
      os << csv_header << '\n';
      for (const auto& r : reports) os << csv_row(r) << '\n';
      break;
    case OutputFormat::Json:
      os << nlohmann::json(reports).dump(2) << '\n';
      break;
  }
}

}  // namespace chevkit

#endif  // CHEVKIT_REPORT_HPP
