#ifndef ITERCURVE_CACHE_HPP
#define ITERCURVE_CACHE_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "real.hpp"

namespace itercurve {

// One line of the JSON-lines cache file. Values are stored with enough
// decimal digits to round-trip at their binary precision.
struct CacheEntry {
  static constexpr int schema_version = 1;
  std::string kind;  // constant | p1word | curveword
  std::string descriptor;
  int precision = 0;  // decimal digits requested
  mpfr_prec_t bits = 0;
  std::string re, im, err;

  auto key() const { return std::tie(kind, descriptor, precision); }
};

namespace detail {
inline std::string exact_decimal(const Real& x) {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, 0, x.get(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  if (mpfr_zero_p(x.get())) return "0";
  if (!mpfr_number_p(x.get())) return digits;
  bool neg = digits[0] == '-';
  if (neg) digits.erase(0, 1);
  return (neg ? "-0." : "0.") + digits + "e" + std::to_string(e);
}
inline Real read_decimal(const std::string& s, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN) != 0 && s.find_first_not_of("0123456789.-+eE") != std::string::npos)
    throw std::runtime_error("bad decimal '" + s + "'");
  return r;
}
}  // namespace detail

class PersistentCache {
 public:
  explicit PersistentCache(std::string path) : path_(std::move(path)) { load(); }

  // ITERCURVE_CACHE, default ./.itercurve-cache
  static std::string default_path() {
    const char* p = std::getenv("ITERCURVE_CACHE");
    return p && *p ? p : "./.itercurve-cache";
  }

  const std::string& path() const { return path_; }
  size_t size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return entries_.size();
  }
  size_t skipped_lines() const { return skipped_; }

  std::optional<ApproxC> get(const std::string& kind, const std::string& descriptor, int precision) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = entries_.find({kind, descriptor, precision});
    if (it == entries_.end()) return std::nullopt;
    const CacheEntry& e = it->second;
    Real err = detail::read_decimal(e.err, 64);
    Bound b = Bound::abs_of(err);
    return ApproxC{detail::read_decimal(e.re, e.bits), detail::read_decimal(e.im, e.bits), b};
  }

  // Entries are immutable: a second put on an existing key is ignored.
  void put(const std::string& kind, const std::string& descriptor, int precision, const ApproxC& v) {
    std::lock_guard<std::mutex> lk(mu_);
    std::tuple<std::string, std::string, int> key{kind, descriptor, precision};
    if (entries_.count(key)) return;
    CacheEntry e;
    e.kind = kind;
    e.descriptor = descriptor;
    e.precision = precision;
    e.bits = std::max(v.re.prec(), v.im.prec());
    e.re = detail::exact_decimal(v.re);
    e.im = detail::exact_decimal(v.im);
    e.err = detail::exact_decimal(v.err.real());
    std::ofstream out(path_, std::ios::app);
    if (out) {
      out << to_json(e).dump() << '\n';
      out.flush();
    }
    entries_.emplace(key, e);
  }

  static nlohmann::json to_json(const CacheEntry& e) {
    return {{"schema_version", CacheEntry::schema_version},
            {"key", {{"kind", e.kind}, {"descriptor", e.descriptor}, {"precision", e.precision}}},
            {"bits", e.bits},
            {"value", {{"re", e.re}, {"im", e.im}}},
            {"err", e.err}};
  }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        auto j = nlohmann::json::parse(line);
        if (j.at("schema_version").get<int>() != CacheEntry::schema_version) throw std::runtime_error("schema version");
        CacheEntry e;
        e.kind = j.at("key").at("kind").get<std::string>();
        e.descriptor = j.at("key").at("descriptor").get<std::string>();
        e.precision = j.at("key").at("precision").get<int>();
        e.bits = j.at("bits").get<long>();
        e.re = j.at("value").at("re").get<std::string>();
        e.im = j.at("value").at("im").get<std::string>();
        e.err = j.at("err").get<std::string>();
        if (e.bits < MPFR_PREC_MIN || e.bits > (1L << 24)) throw std::runtime_error("bits out of range");
        detail::read_decimal(e.re, e.bits);
        detail::read_decimal(e.im, e.bits);
        detail::read_decimal(e.err, 64);
        entries_.emplace(e.key(), e);
      } catch (const std::exception& ex) {
        ++skipped_;
        std::cerr << "warning: cache " << path_ << " line " << lineno << " skipped (" << ex.what() << ")\n";
      }
    }
  }

  std::string path_;
  mutable std::mutex mu_;
  std::map<std::tuple<std::string, std::string, int>, CacheEntry> entries_;
  size_t skipped_ = 0;
};

}  // namespace itercurve

#endif
