#include "permstat/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permstat/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace permstat {

namespace {

json poly_to_json_obj(const JointPolynomial& poly) {
  json body = json::array();
  for (const auto& [mono, coeff] : poly.terms()) {
    json m = json::array();
    for (auto e : mono) m.push_back(e);
    body.push_back(json::array({m, coeff.get_str()}));
  }
  return json{{"var_count", poly.var_count()}, {"terms", body}};
}

JointPolynomial poly_from_json_obj(const json& j) {
  JointPolynomial poly(j.at("var_count").get<int>());
  for (const auto& term : j.at("terms")) {
    JointPolynomial::Monomial mono;
    for (const auto& e : term.at(0)) mono.push_back(e.get<std::uint32_t>());
    poly.add_term(std::move(mono), mpz_class(term.at(1).get<std::string>()));
  }
  return poly;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
  return out;
}

}  // namespace

std::string polynomial_to_json(const JointPolynomial& poly) {
  return poly_to_json_obj(poly).dump();
}

JointPolynomial polynomial_from_json(const std::string& text) {
  try {
    return poly_from_json_obj(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("bad polynomial JSON: ") + e.what());
  }
}

std::string ResultCache::file_path(const std::string& scheme_set, const std::string& spec, int n,
                                   const std::string& series) const {
  return dir_ + "/" + sanitize(scheme_set) + "__" + sanitize(spec) + "__n" + std::to_string(n) +
         "__" + sanitize(series) + ".json";
}

void ResultCache::store(const std::string& scheme_set, const std::string& spec, int n,
                        const std::string& series, const JointPolynomial& poly) const {
  fs::create_directories(dir_);
  json doc{{"header",
            {{"format_version", kCacheFormatVersion},
             {"scheme_set", scheme_set},
             {"spec", spec},
             {"n", n},
             {"series", series}}},
           {"body", poly_to_json_obj(poly)}};
  std::ofstream out(file_path(scheme_set, spec, n, series), std::ios::trunc);
  out << doc.dump(1) << "\n";
}

std::optional<JointPolynomial> ResultCache::load(const std::string& scheme_set,
                                                 const std::string& spec, int n,
                                                 const std::string& series) const {
  std::ifstream in(file_path(scheme_set, spec, n, series));
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    const json& h = doc.at("header");
    if (h.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (h.at("scheme_set").get<std::string>() != scheme_set ||
        h.at("spec").get<std::string>() != spec || h.at("n").get<int>() != n ||
        h.at("series").get<std::string>() != series)
      return std::nullopt;
    return poly_from_json_obj(doc.at("body"));
  } catch (const json::exception&) {
    return std::nullopt;  // corrupt cache entries are treated as misses
  }
}

std::vector<std::string> ResultCache::list_entries() const {
  std::vector<std::string> out;
  if (!fs::exists(dir_)) return out;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

void ResultCache::clear() const {
  if (!fs::exists(dir_)) return;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.path().extension() == ".json") fs::remove(e.path());
}

JointPolynomial evaluate_cached(const ResultCache* cache, const MergedScheme& ms, int n,
                                const SpecializationMap& spec, SeriesCenter series,
                                const EvalConfig& cfg) {
  if (cache) {
    if (auto hit = cache->load(ms.id(), spec.str(), n, series.str())) return *hit;
  }
  JointPolynomial result = evaluate(ms, n, spec, series, cfg);
  if (cache) cache->store(ms.id(), spec.str(), n, series.str(), result);
  return result;
}

}  // namespace permstat
