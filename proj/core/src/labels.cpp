#include "ferocc/labels.hpp"

namespace ferocc {

const std::array<std::string_view, kNumClasses>& emotion_names() {
  static const std::array<std::string_view, kNumClasses> names = {
      "anger", "contempt", "disgust", "fear", "happiness", "neutral", "sadness", "surprise"};
  return names;
}

std::string_view to_name(EmotionLabel label) { return emotion_names()[static_cast<size_t>(label)]; }

int to_index(EmotionLabel label) { return static_cast<int>(label); }

std::optional<EmotionLabel> label_from_index(int index) {
  if (index < 0 || index >= kNumClasses) return std::nullopt;
  return static_cast<EmotionLabel>(index);
}

std::optional<EmotionLabel> label_from_name(std::string_view name) {
  const auto& names = emotion_names();
  for (int i = 0; i < kNumClasses; ++i) {
    if (names[static_cast<size_t>(i)] == name) return static_cast<EmotionLabel>(i);
  }
  return std::nullopt;
}

}  // namespace ferocc
