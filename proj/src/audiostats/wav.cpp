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

#include "rarity/audiostats/audio.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>

namespace rarity::audiostats {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

struct Format {
  std::uint16_t code;
  std::uint16_t channels;
  std::uint32_t sample_rate;
  std::uint16_t block_align;
  std::uint16_t bits;
};

Format parse_fmt(std::span<const std::uint8_t> chunk) {
  if (chunk.size() < 16) throw FormatError("fmt chunk: shorter than 16 bytes");
  Format f{read_u16(chunk, 0), read_u16(chunk, 2), read_u32(chunk, 4), read_u16(chunk, 12),
           read_u16(chunk, 14)};
  if (f.code == kFormatExtensible) {
    if (chunk.size() < 40) throw FormatError("fmt chunk: truncated WAVE_FORMAT_EXTENSIBLE block");
    f.code = read_u16(chunk, 24);
  }
  if (f.code != kFormatPcm && f.code != kFormatFloat)
    throw FormatError("fmt chunk: unsupported format code " + std::to_string(f.code));
  const bool ok_bits = f.code == kFormatPcm ? (f.bits == 16 || f.bits == 24 || f.bits == 32)
                                            : f.bits == 32;
  if (!ok_bits)
    throw FormatError("fmt chunk: unsupported bit depth " + std::to_string(f.bits) +
                      " for format code " + std::to_string(f.code));
  if (f.channels == 0) throw FormatError("fmt chunk: zero channels");
  if (f.sample_rate == 0) throw FormatError("fmt chunk: zero sample rate");
  if (f.block_align != f.channels * (f.bits / 8))
    throw FormatError("fmt chunk: block align " + std::to_string(f.block_align) +
                      " does not match channels and bit depth");
  return f;
}

double decode_sample(std::span<const std::uint8_t> b, std::size_t at, const Format& f) {
  if (f.code == kFormatFloat) {
    const float v = std::bit_cast<float>(read_u32(b, at));
    if (!std::isfinite(v)) return 0.0;
    return std::clamp(static_cast<double>(v), -1.0, 1.0);
  }
  switch (f.bits) {
    case 16:
      return static_cast<std::int16_t>(read_u16(b, at)) / 32768.0;
    case 24: {
      std::int32_t v = b[at] | (b[at + 1] << 8) | (b[at + 2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    default:
      return static_cast<std::int32_t>(read_u32(b, at)) / 2147483648.0;
  }
}

}  // namespace

AudioBuffer::AudioBuffer(std::vector<double> samples, double sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (!(sample_rate_ > 0)) throw std::invalid_argument("sample rate must be positive");
  for (double s : samples_)
    if (!(s >= -1.0 && s <= 1.0)) throw std::invalid_argument("sample outside [-1, 1]");
}

AudioBuffer parse_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) throw FormatError("RIFF header: file shorter than 12 bytes");
  if (!tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
    throw FormatError("RIFF header: not a RIFF/WAVE file");

  std::optional<Format> format;
  std::optional<std::span<const std::uint8_t>> data;
  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    std::string id(reinterpret_cast<const char*>(bytes.data() + at), 4);
    const std::uint32_t size = read_u32(bytes, at + 4);
    const std::size_t body = at + 8;
    if (size > bytes.size() - body)
      throw FormatError("'" + id + "' chunk: declares " + std::to_string(size) +
                        " bytes but only " + std::to_string(bytes.size() - body) + " remain");
    auto chunk = bytes.subspan(body, size);
    if (id == "fmt ") format = parse_fmt(chunk);
    if (id == "data") data = chunk;
    at = body + size + (size & 1u);
  }
  if (!format) throw FormatError("fmt chunk: missing");
  if (!data) throw FormatError("data chunk: missing");
  if (data->empty()) throw FormatError("data chunk: zero-length audio data");

  const std::size_t frames = data->size() / format->block_align;
  if (frames == 0) throw FormatError("data chunk: shorter than one frame");
  const std::size_t width = format->bits / 8;
  std::vector<double> samples(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::size_t c = 0; c < format->channels; ++c)
      acc += decode_sample(*data, i * format->block_align + c * width, *format);
    samples[i] = std::clamp(acc / format->channels, -1.0, 1.0);
  }
  return AudioBuffer(std::move(samples), format->sample_rate);
}

AudioBuffer load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return parse_wav(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_wav(const AudioBuffer& buffer, int bit_depth) {
  if (bit_depth != 16) throw std::invalid_argument("only 16-bit output is supported");
  const auto rate = static_cast<std::uint32_t>(std::lround(buffer.sample_rate()));
  const auto data_bytes = static_cast<std::uint32_t>(buffer.size() * 2);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, rate);
  put_u32(out, rate * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (double s : buffer.samples()) {
    const long q = std::clamp(std::lround(s * 32768.0), -32768L, 32767L);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  return out;
}

void write_wav(const AudioBuffer& buffer, const std::filesystem::path& path, int bit_depth) {
  const auto bytes = encode_wav(buffer, bit_depth);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace rarity::audiostats
