#ifndef COMPTEST_STAND_HPP
#define COMPTEST_STAND_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace comptest {

/// One row of the resource capability table: an instrument supporting
/// `method` with parameter `attribut` in [min, max].
struct ResourceDef {
  std::string id;
  std::string method;
  std::string attribut;
  double min = 0.0;
  double max = 0.0;
  std::string unit;
  int row = 0;

  friend bool operator==(const ResourceDef&, const ResourceDef&) = default;
};

struct ResourceTable {
  std::vector<ResourceDef> rows;
  friend bool operator==(const ResourceTable&, const ResourceTable&) = default;
};

enum class ConnectorKind { sw, mx };

/// A switch (`SwG.P`) or multiplexer (`MxG.P`) position. At most one
/// position of a group is engaged at a time.
struct Connector {
  ConnectorKind kind = ConnectorKind::sw;
  int group = 0;
  int position = 0;

  std::pair<ConnectorKind, int> group_key() const { return {kind, group}; }
  friend auto operator<=>(const Connector&, const Connector&) = default;
};

std::string to_string(const Connector& c);
std::optional<Connector> parse_connector(std::string_view text);

/// Resource-to-pin wiring. Row and column order are kept so the sheet can
/// be written back unchanged.
class ConnectionMatrix {
 public:
  struct Cell {
    std::string resource;
    std::string pin;
    Connector connector;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  ConnectionMatrix() = default;
  ConnectionMatrix(std::vector<std::string> resources,
                   std::vector<std::string> pins);

  const std::vector<std::string>& resources() const { return resources_; }
  const std::vector<std::string>& pins() const { return pins_; }
  const std::vector<Cell>& cells() const { return cells_; }

  /// Adds a row or column label if it is not known yet.
  void add_resource(std::string resource);
  void add_pin(std::string pin);

  /// Sets or replaces the connector for (resource, pin); both labels are
  /// added when missing.
  void connect(const std::string& resource, const std::string& pin,
               Connector connector);
  void remove_resource(std::string_view resource);

  std::optional<Connector> find(std::string_view resource,
                                std::string_view pin) const;

  friend bool operator==(const ConnectionMatrix&,
                         const ConnectionMatrix&) = default;

 private:
  std::vector<std::string> resources_;
  std::vector<std::string> pins_;
  std::vector<Cell> cells_;  // sorted by (resource row, pin column)
};

/// Everything the interpreter knows about its test stand.
struct Stand {
  ResourceTable resources;
  ConnectionMatrix connections;
  /// Methods delivered over the stand's bus interface (e.g. CAN) rather
  /// than through a switched resource.
  std::set<std::string, std::less<>> bus_methods{"put_can", "get_can"};

  /// Drops every resource row and matrix row with this id.
  void remove_resource(std::string_view id);
};

}  // namespace comptest

#endif  // COMPTEST_STAND_HPP
