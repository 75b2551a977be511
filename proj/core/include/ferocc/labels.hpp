#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ferocc {

inline constexpr int kNumClasses = 8;

/// The eight emotion classes, ordered alphabetically. The index is the wire
/// value everywhere (manifests, confusion matrices, vote columns).
enum class EmotionLabel : int {
  anger = 0,
  contempt = 1,
  disgust = 2,
  fear = 3,
  happiness = 4,
  neutral = 5,
  sadness = 6,
  surprise = 7,
};

const std::array<std::string_view, kNumClasses>& emotion_names();

std::string_view to_name(EmotionLabel label);
int to_index(EmotionLabel label);
std::optional<EmotionLabel> label_from_index(int index);
std::optional<EmotionLabel> label_from_name(std::string_view name);

}  // namespace ferocc
