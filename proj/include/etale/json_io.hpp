#ifndef ETALE_JSON_IO_HPP
#define ETALE_JSON_IO_HPP

#include <json.hpp>

#include "etale/elliptic.hpp"
#include "etale/moduli.hpp"

namespace etale {

using json = nlohmann::ordered_json;

json curve_json(const Curve& curve);
json function_json(const AffineFunction& t);
json cover_json(const CoverCertificate& cert);
json matrix_json(const SemilinearMap& M);
json classification_json(const Classification& cls);
json search_json(const SearchReport& report);
json family_json(const FamilyReport& report);
json table_json();
json legendre_json(const Elem& lambda);

// TSV mirrors, one row per line, tab-separated with a header line.
std::string search_tsv(const SearchReport& report);
std::string table_tsv();

}  // namespace etale

#endif
