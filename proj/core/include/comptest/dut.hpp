#ifndef COMPTEST_DUT_HPP
#define COMPTEST_DUT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "comptest/numeric.hpp"
#include "comptest/sheet_model.hpp"

namespace comptest {

/// Physical value a stimulus puts on a pin: a number in the method's unit
/// (ohms for put_r), an open circuit, or a bus payload (put_can).
using PinValue = std::variant<double, OpenCircuit, BitLiteral>;

struct PinStimulus {
  std::string method;
  PinValue value;
  /// Remaining parameters (d1..d3), rendered as script text.
  std::map<std::string, std::string, std::less<>> aux;

  friend bool operator==(const PinStimulus&, const PinStimulus&) = default;
};

/// Simulated device under test. Implementations must be deterministic and
/// their clock may only move forward.
class DutModel {
 public:
  virtual ~DutModel() = default;

  /// Throws std::invalid_argument for pins or value kinds the DUT lacks.
  virtual void set_input(std::string_view pin, const PinStimulus& stimulus) = 0;
  virtual void advance(Duration dt) = 0;
  /// Voltage on an output pin, in volts.
  virtual double read_pin(std::string_view pin) = 0;
  virtual Duration now() const = 0;
};

/// Interior-illumination ECU: door switches DS_FL/FR/RL/RR (resistance,
/// below threshold = door open), NIGHT and IGN_ST bus bits, lamp outputs
/// INT_ILL_F and INT_ILL_R. The lamp is on while NIGHT is set, a door is
/// open and less than `timeout` has elapsed since a door opened.
struct InteriorIlluminationConfig {
  Duration timeout = std::chrono::seconds{300};
  double ubatt = 12.0;
  double door_threshold_ohm = 100.0;
  /// Restart the timer whenever any door opens, even if another door is
  /// already open. When false only the first door opening starts it.
  bool rearm_on_each_open = true;
};

class InteriorIlluminationDut final : public DutModel {
 public:
  explicit InteriorIlluminationDut(InteriorIlluminationConfig config = {});

  void set_input(std::string_view pin, const PinStimulus& stimulus) override;
  void advance(Duration dt) override;
  double read_pin(std::string_view pin) override;
  Duration now() const override { return now_; }

  bool lamp_on() const;
  const std::optional<BitLiteral>& ignition() const { return ignition_; }

 private:
  InteriorIlluminationConfig config_;
  Duration now_{};
  std::map<std::string, bool, std::less<>> door_open_;
  bool night_ = false;
  std::optional<BitLiteral> ignition_;
  std::optional<Duration> opened_at_;
};

std::unique_ptr<DutModel> reference_dut(InteriorIlluminationConfig config = {});

/// Built-in models selectable by name. Returns nullptr for unknown names.
std::unique_ptr<DutModel> make_dut(std::string_view name,
                                   const InteriorIlluminationConfig& config);
std::vector<std::string> dut_names();

}  // namespace comptest

#endif  // COMPTEST_DUT_HPP
