#include "perfect/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "perfect/errors.hpp"

namespace perfect {

namespace {

template <class A, class B>
std::string pairs_text(std::vector<std::pair<A, B>> const& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].first << ':' << static_cast<std::uint64_t>(v[i].second);
  }
  return os.str();
}

template <class A, class B>
std::vector<std::pair<A, B>> parse_pairs(std::string const& s) {
  std::vector<std::pair<A, B>> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("fingerprint: bad pair '" + item + "'");
    out.emplace_back(static_cast<A>(std::stoull(item.substr(0, colon))),
                     static_cast<B>(std::stoull(item.substr(colon + 1))));
  }
  return out;
}

std::vector<std::uint64_t> parse_list(std::string const& s) {
  std::vector<std::uint64_t> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stoull(item));
  return out;
}

std::map<std::string, std::string> parse_fields(std::string const& text) {
  std::map<std::string, std::string> f;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed field '" + tok + "'");
    f[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return f;
}

template <class T>
bool optional_match(std::optional<T> const& a, std::optional<T> const& b) {
  return !a || !b || *a == *b;
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "ord=" << order << " der=";
  for (std::size_t i = 0; i < derived_series.size(); ++i) os << (i ? "," : "") << derived_series[i];
  os << " cls=" << class_count << " co=" << pairs_text(class_invariants);
  if (full) {
    os << " ns=" << (normals ? pairs_text(*normals) : "?");
    os << " li=" << (low_index ? pairs_text(*low_index) : "?");
    os << " aut=" << (aut_order ? std::to_string(*aut_order) : "?");
  }
  return os.str();
}

Fingerprint Fingerprint::parse(std::string const& text) {
  auto f = parse_fields(text);
  Fingerprint fp;
  fp.order = std::stoull(f.at("ord"));
  fp.derived_series = parse_list(f.at("der"));
  fp.class_count = std::stoull(f.at("cls"));
  fp.class_invariants = parse_pairs<std::uint32_t, std::uint64_t>(f.at("co"));
  if (f.count("ns")) {
    fp.full = true;
    if (f["ns"] != "?") fp.normals = parse_pairs<std::uint64_t, bool>(f["ns"]);
    if (f.at("li") != "?") fp.low_index = parse_pairs<std::uint64_t, std::uint64_t>(f["li"]);
    if (f.at("aut") != "?") fp.aut_order = std::stoull(f["aut"]);
  }
  return fp;
}

bool cheap_parts_equal(Fingerprint const& a, Fingerprint const& b) {
  return a.order == b.order && a.derived_series == b.derived_series && a.class_count == b.class_count &&
         a.class_invariants == b.class_invariants;
}

bool fingerprints_compatible(Fingerprint const& a, Fingerprint const& b) {
  if (!cheap_parts_equal(a, b)) return false;
  if (!a.full || !b.full) return true;
  return optional_match(a.normals, b.normals) && optional_match(a.low_index, b.low_index) &&
         optional_match(a.aut_order, b.aut_order);
}

std::string Construction::to_string() const {
  switch (kind) {
    case Kind::seed:
      return "seed " + name;
    case Kind::product:
      return "product " + name;
    case Kind::extension:
      break;
  }
  std::ostringstream os;
  os << "d=" << d << " F=" << d << '/' << factor_index << " p=" << p << " a=" << a << " orbit=" << orbit;
  return os.str();
}

Construction Construction::parse(std::string const& text) {
  Construction c;
  if (text.rfind("seed ", 0) == 0) {
    c.kind = Kind::seed;
    c.name = text.substr(5);
    return c;
  }
  if (text.rfind("product ", 0) == 0) {
    c.kind = Kind::product;
    c.name = text.substr(8);
    return c;
  }
  auto f = parse_fields(text);
  c.kind = Kind::extension;
  c.d = std::stoull(f.at("d"));
  auto fs = f.at("F");
  c.factor_index = std::stoull(fs.substr(fs.find('/') + 1));
  c.p = static_cast<unsigned>(std::stoul(f.at("p")));
  c.a = static_cast<unsigned>(std::stoul(f.at("a")));
  c.orbit = std::stoull(f.at("orbit"));
  return c;
}

GroupData& GroupRecord::data() const {
  if (!data_) data_ = std::make_shared<GroupData>(group);
  return *data_;
}

std::vector<GroupRecord> const& PerfectCatalog::records(std::uint64_t n) const {
  static std::vector<GroupRecord> const empty;
  if (guard_ && (n == guard_ || guard_ % n != 0)) {
    throw InvariantViolation("catalog read of order " + std::to_string(n) + " while building order " +
                             std::to_string(guard_));
  }
  auto it = orders_.find(n);
  return it == orders_.end() ? empty : it->second;
}

void PerfectCatalog::publish(std::uint64_t n, std::vector<GroupRecord> records) {
  if (orders_.count(n)) throw std::logic_error("catalog order published twice");
  orders_.emplace(n, std::move(records));
}

std::map<std::uint64_t, std::size_t> PerfectCatalog::counts() const {
  std::map<std::uint64_t, std::size_t> out;
  for (auto const& [n, recs] : orders_) {
    if (!recs.empty()) out[n] = recs.size();
  }
  return out;
}

std::string order_file_text(std::uint64_t n, std::vector<GroupRecord> const& records) {
  std::ostringstream os;
  os << "PERFECT v1 order=" << n << " count=" << records.size() << '\n';
  for (auto const& r : records) {
    os << "group " << r.index << '\n';
    os << "degree " << r.group.degree() << '\n';
    for (auto const& g : r.group.generators()) {
      for (std::size_t i = 0; i < g.degree(); ++i) os << (i ? " " : "") << g[static_cast<Point>(i)] + 1;
      os << '\n';
    }
    os << "fingerprint " << r.fingerprint.to_string() << '\n';
    os << "construction " << r.construction.to_string() << '\n';
  }
  return os.str();
}

std::vector<GroupRecord> parse_order_file(std::string const& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("PERFECT v1 ", 0) != 0) {
    throw std::invalid_argument("catalog file: missing header");
  }
  auto header = parse_fields(line.substr(11));
  std::uint64_t n = std::stoull(header.at("order"));
  std::size_t count = std::stoull(header.at("count"));
  std::vector<GroupRecord> out;
  while (std::getline(is, line)) {
    if (line.rfind("group ", 0) != 0) throw std::invalid_argument("catalog file: expected group line");
    GroupRecord r;
    r.order = n;
    r.index = std::stoull(line.substr(6));
    std::getline(is, line);
    std::size_t degree = std::stoull(line.substr(7));
    std::vector<Permutation> gens;
    while (std::getline(is, line) && line.rfind("fingerprint ", 0) != 0) {
      std::istringstream ls(line);
      std::vector<Point> img;
      Point x;
      while (ls >> x) img.push_back(x);
      if (img.size() != degree) throw std::invalid_argument("catalog file: generator of wrong degree");
      gens.push_back(Permutation::from_one_based(img));
    }
    r.group = PermGroup(degree, std::move(gens));
    r.fingerprint = Fingerprint::parse(line.substr(12));
    std::getline(is, line);
    if (line.rfind("construction ", 0) != 0) throw std::invalid_argument("catalog file: expected construction");
    r.construction = Construction::parse(line.substr(13));
    out.push_back(std::move(r));
  }
  if (out.size() != count) throw std::invalid_argument("catalog file: count mismatch");
  return out;
}

void PerfectCatalog::save_order(std::filesystem::path const& dir, std::uint64_t n) const {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / ("order_" + std::to_string(n) + ".txt"), std::ios::binary);
  out << order_file_text(n, orders_.at(n));
  if (!out) throw std::runtime_error("cannot write catalog file for order " + std::to_string(n));
}

void PerfectCatalog::save_frontier(std::filesystem::path const& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "frontier.txt", std::ios::binary);
  out << "frontier " << frontier_ << '\n';
}

PerfectCatalog PerfectCatalog::load(std::filesystem::path const& dir) {
  PerfectCatalog c;
  std::ifstream fr(dir / "frontier.txt");
  std::string word;
  if (!(fr >> word >> c.frontier_) || word != "frontier") return PerfectCatalog{};
  for (std::uint64_t n = 1; n <= c.frontier_; ++n) {
    std::ifstream in(dir / ("order_" + std::to_string(n) + ".txt"), std::ios::binary);
    if (!in) {
      c.orders_.emplace(n, std::vector<GroupRecord>{});
      continue;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    c.orders_.emplace(n, parse_order_file(ss.str()));
  }
  return c;
}

}  // namespace perfect
