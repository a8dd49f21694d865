// Copyright 2026 The Rarity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef RARITY_AUDIOSTATS_AUDIO_HPP_
#define RARITY_AUDIOSTATS_AUDIO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rarity::audiostats {

/// Malformed or unsupported RIFF/WAVE input. The message names the chunk.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mono samples in [-1, 1] plus a sample rate.
class AudioBuffer {
 public:
  AudioBuffer(std::vector<double> samples, double sample_rate);

  std::span<const double> samples() const { return samples_; }
  double sample_rate() const { return sample_rate_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<double> samples_;
  double sample_rate_;
};

/// Reads PCM 16/24/32-bit integer (format 1), 32-bit float (format 3) and
/// WAVE_FORMAT_EXTENSIBLE wrappers around either. Channels are averaged per
/// frame. Integer samples divide by 2^(bits-1); float samples are clamped to
/// [-1, 1].
AudioBuffer load_wav(const std::filesystem::path& path);
AudioBuffer parse_wav(std::span<const std::uint8_t> bytes);

/// Mono 16-bit PCM. Samples are scaled by 32768, rounded to nearest and
/// clamped to [-32768, 32767], so load_wav(write_wav(b)) is within one
/// quantization step of b.
void write_wav(const AudioBuffer& buffer, const std::filesystem::path& path, int bit_depth = 16);
std::vector<std::uint8_t> encode_wav(const AudioBuffer& buffer, int bit_depth = 16);

}  // namespace rarity::audiostats

#endif  // RARITY_AUDIOSTATS_AUDIO_HPP_
