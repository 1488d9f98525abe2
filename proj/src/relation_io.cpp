#include "dds/relation_io.hpp"

#include <istream>
#include <set>
#include <sstream>

#include "dds/errors.hpp"

namespace dds {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string after_key(const std::string& line, const std::string& key) {
  auto t = trim(line);
  if (t.rfind(key, 0) != 0) throw InputError("expected '" + key + "' line, got: " + t);
  return t.substr(key.size());
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (!t.empty() && t[0] != '#') {
      line = t;
      return true;
    }
  }
  return false;
}

nlohmann::ordered_json relation_json(const Relation& r) {
  nlohmann::ordered_json j;
  j["domain"] = r.domain().labels();
  j["bits"] = r.hex();
  return j;
}

nlohmann::ordered_json node_json(const Decomposition& d, std::set<const Decomposition*>& emitted) {
  nlohmann::ordered_json j;
  j["domain"] = d.source.domain().labels();
  j["bits"] = d.source.hex();
  j["prime"] = d.prime;
  j["reducible"] = d.reducible;
  j["principal_factor"] = d.principal_factor.hex();
  auto kids = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.consequences.size(); ++i) {
    const auto& child = d.children[i];
    if (!child) {
      auto leaf = relation_json(d.consequences[i]);
      leaf["prime"] = true;
      kids.push_back(std::move(leaf));
    } else if (emitted.count(child.get())) {
      kids.push_back({{"ref", child->source.domain().labels()}});
    } else {
      emitted.insert(child.get());
      kids.push_back(node_json(*child, emitted));
    }
  }
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

Relation read_relation(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw InputError("missing domain line");
  std::istringstream ds(after_key(line, "domain:"));
  std::vector<std::string> labels;
  for (std::string tok; ds >> tok;) labels.push_back(tok);
  if (labels.empty()) throw InputError("domain has no points");

  if (!next_content_line(in, line)) throw InputError("missing radix line");
  std::istringstream rs(after_key(line, "radix:"));
  std::vector<std::uint32_t> radices;
  for (long v; rs >> v;) {
    if (v < 2) throw InputError("radix must be at least 2");
    radices.push_back(static_cast<std::uint32_t>(v));
  }
  if (!rs.eof()) throw InputError("malformed radix line");
  if (radices.empty()) throw InputError("radix line is empty");

  std::string bits;
  while (next_content_line(in, line)) bits += line;

  std::vector<Point> pts;
  for (std::size_t i = 0; i < labels.size(); ++i) pts.push_back({static_cast<std::uint32_t>(i), labels[i]});
  return Relation::from_bits(Domain(std::move(pts), std::move(radices)), bits);
}

Relation parse_relation(const std::string& text) {
  std::istringstream in(text);
  return read_relation(in);
}

std::string format_relation(const Relation& r) {
  std::string out = "domain:";
  for (auto& l : r.domain().labels()) out += " " + l;
  out += "\nradix:";
  if (r.domain().uniform() && !r.domain().empty()) {
    out += " " + std::to_string(r.domain().radix(0));
  } else {
    for (auto q : r.domain().radices()) out += " " + std::to_string(q);
  }
  out += "\n" + r.bit_string() + "\n";
  return out;
}

nlohmann::ordered_json decomposition_json(const Decomposition& root) {
  std::set<const Decomposition*> emitted{&root};
  return node_json(root, emitted);
}

}  // namespace dds
