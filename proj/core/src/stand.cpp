#include "comptest/stand.hpp"

#include <algorithm>
#include <charconv>

namespace comptest {

std::string to_string(const Connector& c) {
  return std::string(c.kind == ConnectorKind::sw ? "Sw" : "Mx") +
         std::to_string(c.group) + "." + std::to_string(c.position);
}

namespace {

std::optional<int> parse_positive(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0) {
    return std::nullopt;
  }
  return value;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return (x | 0x20) == (y | 0x20);
         });
}

}  // namespace

std::optional<Connector> parse_connector(std::string_view text) {
  if (text.size() < 5) return std::nullopt;
  Connector c;
  const std::string_view prefix = text.substr(0, 2);
  if (iequals(prefix, "sw")) {
    c.kind = ConnectorKind::sw;
  } else if (iequals(prefix, "mx")) {
    c.kind = ConnectorKind::mx;
  } else {
    return std::nullopt;
  }
  const std::string_view rest = text.substr(2);
  const auto dot = rest.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  auto group = parse_positive(rest.substr(0, dot));
  auto position = parse_positive(rest.substr(dot + 1));
  if (!group || !position) return std::nullopt;
  c.group = *group;
  c.position = *position;
  return c;
}

ConnectionMatrix::ConnectionMatrix(std::vector<std::string> resources,
                                   std::vector<std::string> pins)
    : resources_(std::move(resources)), pins_(std::move(pins)) {}

void ConnectionMatrix::add_resource(std::string resource) {
  if (std::find(resources_.begin(), resources_.end(), resource) ==
      resources_.end()) {
    resources_.push_back(std::move(resource));
  }
}

void ConnectionMatrix::add_pin(std::string pin) {
  if (std::find(pins_.begin(), pins_.end(), pin) == pins_.end()) {
    pins_.push_back(std::move(pin));
  }
}

void ConnectionMatrix::connect(const std::string& resource,
                               const std::string& pin, Connector connector) {
  add_resource(resource);
  add_pin(pin);
  auto rank = [this](const Cell& cell) {
    const auto r = std::find(resources_.begin(), resources_.end(),
                             cell.resource) -
                   resources_.begin();
    const auto p = std::find(pins_.begin(), pins_.end(), cell.pin) -
                   pins_.begin();
    return std::pair{r, p};
  };
  Cell cell{resource, pin, connector};
  auto it = std::find_if(cells_.begin(), cells_.end(), [&](const Cell& c) {
    return c.resource == resource && c.pin == pin;
  });
  if (it != cells_.end()) {
    it->connector = connector;
    return;
  }
  const auto key = rank(cell);
  auto pos = std::find_if(cells_.begin(), cells_.end(),
                          [&](const Cell& c) { return key < rank(c); });
  cells_.insert(pos, std::move(cell));
}

void ConnectionMatrix::remove_resource(std::string_view resource) {
  std::erase_if(cells_, [&](const Cell& c) { return c.resource == resource; });
  std::erase(resources_, resource);
}

std::optional<Connector> ConnectionMatrix::find(std::string_view resource,
                                                std::string_view pin) const {
  for (const Cell& c : cells_) {
    if (c.resource == resource && c.pin == pin) return c.connector;
  }
  return std::nullopt;
}

void Stand::remove_resource(std::string_view id) {
  std::erase_if(resources.rows,
                [&](const ResourceDef& r) { return r.id == id; });
  connections.remove_resource(id);
}

}  // namespace comptest
