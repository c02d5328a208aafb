#include "gbcache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "tf/ideal.hpp"

namespace tf {

namespace {

constexpr const char* kStamp = "tf-gb-cache-3";

struct CacheState {
  std::mutex mutex;
  bool enabled = true;
  std::string directory;
  std::unordered_map<std::string, std::string> memory;
};

CacheState& state() {
  static CacheState s;
  return s;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class F>
void write_poly(std::ostream& out, const Polynomial<F>& p, int nvars) {
  out << p.size();
  for (const auto& t : p.terms()) {
    out << ' ' << t.monomial.component << ' ' << p.field().to_string(t.coefficient);
    for (int i = 0; i < nvars; ++i) out << ' ' << int{t.monomial[i]};
  }
  out << '\n';
}

template <class F>
Polynomial<F> read_poly(std::istream& in, const RingPtr<F>& ring) {
  std::size_t n = 0;
  in >> n;
  TermList<F> terms;
  terms.reserve(n);
  std::vector<int> exps(static_cast<std::size_t>(ring->nvars()));
  for (std::size_t k = 0; k < n; ++k) {
    int comp = 0;
    std::string coef;
    in >> comp >> coef;
    for (auto& e : exps) in >> e;
    terms.push_back({ring->monomial(exps, comp), ring->field().from_string(coef)});
  }
  if (!in) throw Error("corrupt cache record");
  return Polynomial<F>::from_sorted(ring, std::move(terms));
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void set_gb_cache_enabled(bool enabled) {
  std::lock_guard lock(state().mutex);
  state().enabled = enabled;
}

bool gb_cache_enabled() {
  std::lock_guard lock(state().mutex);
  return state().enabled;
}

void set_gb_cache_directory(const std::string& dir) {
  std::lock_guard lock(state().mutex);
  state().directory = dir;
}

const std::string& gb_cache_directory() { return state().directory; }

namespace detail {

template <class F>
std::string gb_cache_key(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  std::ostringstream s;
  s << kStamp << '|' << ring->field().characteristic() << '|';
  for (const auto& n : ring->names()) s << n << ',';
  s << '|';
  for (int w : ring->weights()) s << w << ',';
  s << '|' << ring->order().name() << '|';
  for (const auto& g : gens) write_poly(s, g, ring->nvars());
  std::string text = s.str();
  // Two independent hashes keep accidental collisions out of reach.
  return hex(fnv1a(text)) + hex(fnv1a(text + "#")) + "-" + std::to_string(text.size());
}

template <class F>
std::optional<GroebnerBasis<F>> gb_cache_lookup(const RingPtr<F>& ring, const std::string& key) {
  std::string record;
  {
    std::lock_guard lock(state().mutex);
    if (!state().enabled) return std::nullopt;
    auto it = state().memory.find(key);
    if (it != state().memory.end()) {
      record = it->second;
    } else if (!state().directory.empty()) {
      std::ifstream in(std::filesystem::path(state().directory) / (key + ".gb"));
      if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        record = buf.str();
        state().memory.emplace(key, record);
      }
    }
  }
  if (record.empty()) return std::nullopt;
  try {
    std::istringstream in(record);
    std::string stamp;
    in >> stamp;
    if (stamp != kStamp) return std::nullopt;
    GroebnerStats st;
    in >> st.pairs >> st.reductions >> st.zero_reductions >> st.chain_skipped >> st.product_skipped;
    std::size_t n = 0;
    in >> n;
    std::vector<Polynomial<F>> elements;
    for (std::size_t i = 0; i < n; ++i) elements.push_back(read_poly(in, ring));
    return GroebnerBasis<F>(ring, std::move(elements), st, {}, -1);
  } catch (const Error&) {
    return std::nullopt;
  }
}

template <class F>
void gb_cache_store(const std::string& key, const GroebnerBasis<F>& gb) {
  std::ostringstream s;
  const auto& st = gb.stats();
  s << kStamp << '\n'
    << st.pairs << ' ' << st.reductions << ' ' << st.zero_reductions << ' ' << st.chain_skipped << ' '
    << st.product_skipped << '\n'
    << gb.size() << '\n';
  for (const auto& g : gb.elements()) write_poly(s, g, gb.ring()->nvars());
  std::string record = s.str();
  std::lock_guard lock(state().mutex);
  if (!state().enabled) return;
  state().memory[key] = record;
  if (state().directory.empty()) return;
  std::error_code ec;
  std::filesystem::path dir(state().directory);
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  auto tmp = dir / (key + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << record;
  }
  std::filesystem::rename(tmp, dir / (key + ".gb"), ec);
}

#define TF_INSTANTIATE_CACHE(F)                                                                        \
  template std::string gb_cache_key(const RingPtr<F>&, const std::vector<Polynomial<F>>&);             \
  template std::optional<GroebnerBasis<F>> gb_cache_lookup(const RingPtr<F>&, const std::string&);     \
  template void gb_cache_store(const std::string&, const GroebnerBasis<F>&);

TF_INSTANTIATE_CACHE(PrimeField)
TF_INSTANTIATE_CACHE(RationalField)

}  // namespace detail
}  // namespace tf
