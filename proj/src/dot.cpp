#include "bipglue/dot.hpp"

#include <sstream>

namespace bipglue {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string ports_text(const PortSet& s) {
  std::string out;
  for (const auto& p : s) {
    if (!out.empty()) out += ' ';
    out += p.name();
  }
  return out;
}

class Emitter {
 public:
  explicit Emitter(std::ostream& os) : os_(os) {}
  std::string fresh() { return "n" + std::to_string(next_++); }
  std::ostream& os() { return os_; }

 private:
  std::ostream& os_;
  int next_ = 0;
};

std::string emit_forest_node(Emitter& e, const Node& n) {
  const std::string id = e.fresh();
  e.os() << "  " << id << " [shape=box, label=" << quoted(to_string(n.label))
         << "];\n";
  for (const auto& c : n.children) {
    const std::string cid = emit_forest_node(e, c);
    e.os() << "  " << id << " -> " << cid << ";\n";
  }
  return id;
}

std::string emit_connector(Emitter& e, const ConnectorTerm& x) {
  using Kind = ConnectorTerm::Kind;
  const std::string id = e.fresh();
  switch (x.kind()) {
    case Kind::Port:
    case Kind::Zero:
    case Kind::One:
      e.os() << "  " << id << " [shape=plaintext, label="
             << quoted(to_string(x)) << "];\n";
      return id;
    case Kind::Typed: {
      const bool trig = x.role() == Role::Trigger;
      e.os() << "  " << id << " [shape=" << (trig ? "triangle" : "point")
             << ", label=\"\", width=" << (trig ? "0.2" : "0.1") << "];\n";
      const std::string in = emit_connector(e, x.inner());
      e.os() << "  " << id << " -> " << in << " [arrowhead=none];\n";
      return id;
    }
    case Kind::Fusion:
      e.os() << "  " << id << " [shape=circle, label=\"\", width=0.05];\n";
      for (const auto& op : x.operands()) {
        const std::string c = emit_connector(e, op);
        e.os() << "  " << id << " -> " << c << " [arrowhead=none];\n";
      }
      return id;
    case Kind::Union:
      e.os() << "  " << id << " [shape=plaintext, label=\"+\"];\n";
      for (const auto& op : x.operands()) {
        const std::string c = emit_connector(e, op);
        e.os() << "  " << id << " -> " << c << " [style=dashed, arrowhead=none];\n";
      }
      return id;
  }
  return id;
}

}  // namespace

std::string to_dot(const Behaviour& b) {
  std::ostringstream os;
  os << "digraph behaviour {\n  rankdir=LR;\n";
  os << "  init [shape=point];\n";
  for (const auto& q : b.lts().states()) {
    os << "  " << quoted(q) << " [shape=circle, tooltip="
       << quoted("offers: " + ports_text(b.offers(q))) << "];\n";
  }
  os << "  init -> " << quoted(b.initial()) << ";\n";
  for (const auto& t : b.lts().transitions())
    os << "  " << quoted(t.from) << " -> " << quoted(t.to)
       << " [label=" << quoted(ports_text(t.label)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const CausalTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n";
  Emitter e(os);
  if (t.roots.empty()) os << "  n0 [shape=plaintext, label=\"0\"];\n";
  for (const auto& r : t.roots) emit_forest_node(e, r);
  os << "}\n";
  return os.str();
}

std::string to_dot(const ConnectorTerm& x) {
  std::ostringstream os;
  os << "digraph connector {\n";
  Emitter e(os);
  emit_connector(e, x);
  os << "}\n";
  return os.str();
}

}  // namespace bipglue
