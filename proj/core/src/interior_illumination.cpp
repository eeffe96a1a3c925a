#include <algorithm>
#include <stdexcept>

#include "comptest/dut.hpp"

namespace comptest {

namespace {

constexpr std::string_view kDoorPins[] = {"DS_FL", "DS_FR", "DS_RL", "DS_RR"};

bool bits_set(const BitLiteral& bits) {
  return std::any_of(bits.text.begin(), bits.text.end(),
                     [](char c) { return c == '1'; });
}

}  // namespace

InteriorIlluminationDut::InteriorIlluminationDut(
    InteriorIlluminationConfig config)
    : config_(config) {
  // Unconnected door switches read as open circuit, i.e. closed doors.
  for (std::string_view pin : kDoorPins) door_open_.emplace(pin, false);
}

void InteriorIlluminationDut::set_input(std::string_view pin,
                                        const PinStimulus& stimulus) {
  if (auto door = door_open_.find(pin); door != door_open_.end()) {
    bool open = false;
    if (const double* ohm = std::get_if<double>(&stimulus.value)) {
      open = *ohm < config_.door_threshold_ohm;
    } else if (!std::holds_alternative<OpenCircuit>(stimulus.value)) {
      throw std::invalid_argument(std::string(pin) +
                                  " expects a resistance, got a bus payload");
    }
    const bool any_open_before =
        std::any_of(door_open_.begin(), door_open_.end(),
                    [](const auto& d) { return d.second; });
    if (open && !door->second &&
        (config_.rearm_on_each_open || !any_open_before)) {
      opened_at_ = now_;
    }
    door->second = open;
    const bool any_open = std::any_of(door_open_.begin(), door_open_.end(),
                                      [](const auto& d) { return d.second; });
    if (!any_open) opened_at_.reset();
    return;
  }

  const BitLiteral* bits = std::get_if<BitLiteral>(&stimulus.value);
  if (pin == "NIGHT" || pin == "IGN_ST") {
    if (bits == nullptr) {
      throw std::invalid_argument(std::string(pin) +
                                  " expects a bit-literal payload");
    }
    if (pin == "NIGHT") {
      night_ = bits_set(*bits);
    } else {
      ignition_ = *bits;
    }
    return;
  }
  throw std::invalid_argument("interior_illumination has no input pin " +
                              std::string(pin));
}

void InteriorIlluminationDut::advance(Duration dt) {
  if (dt < Duration::zero()) {
    throw std::invalid_argument("time may only advance");
  }
  now_ += dt;
}

bool InteriorIlluminationDut::lamp_on() const {
  return night_ && opened_at_ && now_ - *opened_at_ < config_.timeout;
}

double InteriorIlluminationDut::read_pin(std::string_view pin) {
  if (pin != "INT_ILL_F" && pin != "INT_ILL_R") {
    throw std::invalid_argument("interior_illumination has no output pin " +
                                std::string(pin));
  }
  return lamp_on() ? config_.ubatt : 0.0;
}

std::unique_ptr<DutModel> reference_dut(InteriorIlluminationConfig config) {
  return std::make_unique<InteriorIlluminationDut>(config);
}

std::unique_ptr<DutModel> make_dut(std::string_view name,
                                   const InteriorIlluminationConfig& config) {
  if (name == "interior_illumination") return reference_dut(config);
  return nullptr;
}

std::vector<std::string> dut_names() { return {"interior_illumination"}; }

}  // namespace comptest
