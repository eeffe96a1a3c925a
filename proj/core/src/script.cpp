#include "comptest/script.hpp"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <set>

#include "comptest/error.hpp"

namespace comptest {

TestPlan make_plan(TestScript script) {
  TestPlan plan;
  std::map<std::string, Statement, std::less<>> active;
  auto is_input = [&](const std::string& signal) {
    const ScriptSignal* s = script.signal(signal);
    return s == nullptr || s->direction == Direction::input;
  };
  for (const Statement& st : script.init) active.insert_or_assign(st.signal, st);

  plan.steps.reserve(script.steps.size());
  for (const ScriptStep& step : script.steps) {
    PlanStep out{step.index, step.dt, {}, {}};
    for (const Statement& st : step.statements) {
      if (is_input(st.signal)) {
        active.insert_or_assign(st.signal, st);
      } else {
        out.checks.push_back(st);
      }
    }
    for (const ScriptSignal& s : script.signals) {
      if (auto it = active.find(s.name); it != active.end()) {
        out.active_stimuli.push_back(it->second);
      }
    }
    plan.steps.push_back(std::move(out));
  }
  plan.script = std::move(script);
  return plan;
}

namespace {

struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<XmlNode> children;
  long line = 0;

  const std::string* attr(std::string_view key) const {
    for (const auto& [k, v] : attrs) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

struct ParseState {
  XML_Parser parser = nullptr;
  std::vector<XmlNode> stack;
  std::optional<XmlNode> root;
  std::optional<LoadError> error;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** atts) {
  auto* st = static_cast<ParseState*>(data);
  XmlNode node;
  node.name = name;
  node.line = static_cast<long>(XML_GetCurrentLineNumber(st->parser));
  for (const XML_Char** a = atts; *a != nullptr; a += 2) {
    node.attrs.emplace_back(a[0], a[1]);
  }
  st->stack.push_back(std::move(node));
}

void XMLCALL on_end(void* data, const XML_Char*) {
  auto* st = static_cast<ParseState*>(data);
  XmlNode node = std::move(st->stack.back());
  st->stack.pop_back();
  if (st->stack.empty()) {
    st->root = std::move(node);
  } else {
    st->stack.back().children.push_back(std::move(node));
  }
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
  auto* st = static_cast<ParseState*>(data);
  if (st->error) return;
  for (int i = 0; i < len; ++i) {
    const char c = s[i];
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      st->error.emplace(static_cast<long>(XML_GetCurrentLineNumber(st->parser)),
                        "unexpected text content");
      XML_StopParser(st->parser, XML_FALSE);
      return;
    }
  }
}

XmlNode parse_xml(std::string_view xml) {
  ParseState state;
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw LoadError(0, "cannot create XML parser");
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  const auto status = XML_Parse(parser.get(), xml.data(),
                                static_cast<int>(xml.size()), XML_TRUE);
  if (state.error) throw *state.error;
  if (status != XML_STATUS_OK) {
    throw LoadError(static_cast<long>(XML_GetCurrentLineNumber(parser.get())),
                    std::string("malformed XML: ") +
                        XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!state.root) throw LoadError(1, "empty document");
  return std::move(*state.root);
}

void allow_attrs(const XmlNode& node, std::initializer_list<std::string_view> ok) {
  for (const auto& [k, v] : node.attrs) {
    if (std::find(ok.begin(), ok.end(), k) == ok.end()) {
      throw LoadError(node.line, "unknown attribute '" + k + "' on <" +
                                     node.name + ">");
    }
  }
}

const std::string& required(const XmlNode& node, std::string_view key) {
  const std::string* v = node.attr(key);
  if (v == nullptr) {
    throw LoadError(node.line, "missing " + std::string(key) + " on <" +
                                   node.name + ">");
  }
  return *v;
}

Duration parse_dt(const XmlNode& node, bool allow_zero) {
  const std::string& text = required(node, "dt");
  auto seconds = parse_number(text, '.');
  std::optional<Duration> d;
  if (seconds) d = seconds_to_duration(*seconds);
  if (!d || *d < Duration::zero() || (!allow_zero && *d == Duration::zero())) {
    throw LoadError(node.line, "invalid dt '" + text + "' on <" + node.name +
                                   ">");
  }
  return *d;
}

class Loader {
 public:
  TestScript load(const XmlNode& root) {
    if (root.name != "test") {
      throw LoadError(root.line, "root element must be <test>, found <" +
                                     root.name + ">");
    }
    allow_attrs(root, {"name", "dut", "format"});
    script_.name = required(root, "name");
    script_.dut = required(root, "dut");
    const std::string& format = required(root, "format");
    if (format != std::to_string(TestScript::kFormatVersion)) {
      throw LoadError(root.line, "unsupported format '" + format + "'");
    }

    enum class Stage { header, init, steps } stage = Stage::header;
    for (const XmlNode& child : root.children) {
      if (child.name == "header") {
        if (stage != Stage::header) unexpected(child);
        header(child);
        stage = Stage::init;
      } else if (child.name == "init") {
        if (stage != Stage::init) unexpected(child);
        init(child);
        stage = Stage::steps;
      } else if (child.name == "step") {
        if (stage != Stage::steps) unexpected(child);
        step(child);
      } else {
        throw LoadError(child.line, "unknown element <" + child.name + ">");
      }
    }
    if (stage == Stage::header) throw LoadError(root.line, "missing <header>");
    if (stage == Stage::init) throw LoadError(root.line, "missing <init>");
    if (script_.steps.empty()) throw LoadError(root.line, "script has no steps");
    return std::move(script_);
  }

 private:
  [[noreturn]] static void unexpected(const XmlNode& node) {
    throw LoadError(node.line, "unexpected <" + node.name +
                                   "> (expected header, init, then steps)");
  }

  void header(const XmlNode& node) {
    allow_attrs(node, {});
    std::set<std::string, std::less<>> names;
    for (const XmlNode& def : node.children) {
      if (def.name != "signal_def") {
        throw LoadError(def.line, "unknown element <" + def.name +
                                      "> in <header>");
      }
      allow_attrs(def, {"name", "direction", "pins"});
      ScriptSignal s;
      s.name = required(def, "name");
      if (!names.insert(s.name).second) {
        throw LoadError(def.line, "duplicate signal '" + s.name + "'");
      }
      auto dir = parse_direction(required(def, "direction"));
      if (!dir) throw LoadError(def.line, "invalid direction");
      s.direction = *dir;
      std::string_view pins = required(def, "pins");
      for (;;) {
        const auto bar = pins.find('|');
        std::string_view pin = pins.substr(0, bar);
        if (pin.empty()) throw LoadError(def.line, "empty pin name");
        s.pins.emplace_back(pin);
        if (bar == std::string_view::npos) break;
        pins.remove_prefix(bar + 1);
      }
      script_.signals.push_back(std::move(s));
    }
  }

  void init(const XmlNode& node) {
    allow_attrs(node, {"dt"});
    script_.settle = parse_dt(node, true);
    for (const XmlNode& child : node.children) {
      Statement st = statement(child);
      if (script_.signal(st.signal)->direction != Direction::input) {
        throw LoadError(child.line, "<init> may only stimulate input signals");
      }
      script_.init.push_back(std::move(st));
    }
  }

  void step(const XmlNode& node) {
    allow_attrs(node, {"n", "dt", "remark"});
    const std::string& n = required(node, "n");
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), index);
    if (n.empty() || ec != std::errc{} || ptr != n.data() + n.size()) {
      throw LoadError(node.line, "malformed step index '" + n + "'");
    }
    const std::size_t expected = script_.steps.size();
    if (index != expected) {
      throw LoadError(node.line, "non-dense step index " + n + " (expected " +
                                     std::to_string(expected) + ")");
    }
    ScriptStep out;
    out.index = index;
    out.dt = parse_dt(node, false);
    if (const std::string* r = node.attr("remark")) out.remark = *r;
    for (const XmlNode& child : node.children) {
      out.statements.push_back(statement(child));
    }
    script_.steps.push_back(std::move(out));
  }

  Statement statement(const XmlNode& node) {
    if (node.name != "signal") {
      throw LoadError(node.line, "unknown element <" + node.name +
                                     ">, expected <signal>");
    }
    allow_attrs(node, {"name"});
    Statement st;
    st.signal = required(node, "name");
    if (script_.signal(st.signal) == nullptr) {
      throw LoadError(node.line, "signal '" + st.signal +
                                     "' is not declared in <header>");
    }
    if (node.children.size() != 1) {
      throw LoadError(node.line, "<signal> must contain exactly one method");
    }
    const XmlNode& method = node.children.front();
    if (!method.children.empty()) {
      throw LoadError(method.line, "method <" + method.name +
                                       "> must not have children");
    }
    st.invocation.method = method.name;
    for (const auto& [key, value] : method.attrs) {
      try {
        st.invocation.params.push_back(Param{key, parse_param(value)});
      } catch (const ExprSyntaxError& e) {
        throw LoadError(method.line, "in " + key + "=\"" + value +
                                         "\": " + e.what());
      }
    }
    return st;
  }

  TestScript script_;
};

}  // namespace

TestPlan load_script(std::string_view xml) {
  const XmlNode root = parse_xml(xml);
  return make_plan(Loader().load(root));
}

}  // namespace comptest
