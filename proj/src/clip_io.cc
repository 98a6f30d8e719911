/*
 * Copyright 2026 The atomact Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "atomact/clip_io.h"

#include <algorithm>
#include <cstring>
#include <sstream>

#include <png.h>

#include "atomact/errors.h"
#include "atomact/io.h"

namespace atomact {
namespace {

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t GetU32(std::string_view bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[at + i])) << (8 * i);
  }
  return v;
}

}  // namespace

std::string EncodeRawClip(const FrameClip& clip) {
  clip.Validate();
  std::string out(kRawClipMagic, 4);
  PutU32(out, static_cast<std::uint32_t>(clip.t));
  PutU32(out, static_cast<std::uint32_t>(clip.h));
  PutU32(out, static_cast<std::uint32_t>(clip.w));
  out.reserve(out.size() + clip.data.size());
  for (int f = 0; f < clip.t; ++f) {
    for (int c = 0; c < 3; ++c) {
      for (int y = 0; y < clip.h; ++y) {
        for (int x = 0; x < clip.w; ++x) out.push_back(static_cast<char>(clip.at(f, y, x, c)));
      }
    }
  }
  return out;
}

FrameClip DecodeRawClip(std::string_view bytes, std::string clip_id) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kRawClipMagic, 4) != 0) {
    throw Error(ErrorKind::kParse, "clip '" + clip_id + "': missing raw clip header");
  }
  const std::uint32_t t = GetU32(bytes, 4);
  const std::uint32_t h = GetU32(bytes, 8);
  const std::uint32_t w = GetU32(bytes, 12);
  const std::uint64_t body = std::uint64_t{t} * h * w * 3;
  if (t == 0 || h == 0 || w == 0 || bytes.size() - 16 != body) {
    throw Error(ErrorKind::kDimension, "clip '" + clip_id + "': header " + std::to_string(t) +
                                           "x" + std::to_string(h) + "x" + std::to_string(w) +
                                           " does not match payload size");
  }
  FrameClip clip = FrameClip::Filled(std::move(clip_id), static_cast<int>(t),
                                     static_cast<int>(h), static_cast<int>(w));
  std::size_t at = 16;
  for (int f = 0; f < clip.t; ++f) {
    for (int c = 0; c < 3; ++c) {
      for (int y = 0; y < clip.h; ++y) {
        for (int x = 0; x < clip.w; ++x) {
          clip.at(f, y, x, c) = static_cast<std::uint8_t>(bytes[at++]);
        }
      }
    }
  }
  return clip;
}

FrameClip ReadRawClip(const std::filesystem::path& path) {
  return DecodeRawClip(ReadFile(path), path.stem().string());
}

void WriteRawClip(const std::filesystem::path& path, const FrameClip& clip) {
  WriteFileAtomic(path, EncodeRawClip(clip));
}

FrameClip ReadPngClip(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> frames;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".png") {
      frames.push_back(entry.path());
    }
  }
  if (ec) throw Error(ErrorKind::kIo, "cannot list " + dir.string() + ": " + ec.message());
  if (frames.empty()) throw Error(ErrorKind::kIo, dir.string() + ": no PNG frames");
  std::sort(frames.begin(), frames.end());

  FrameClip clip;
  clip.clip_id = dir.filename().string();
  for (const auto& frame : frames) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, frame.string().c_str())) {
      throw Error(ErrorKind::kIo, frame.string() + ": " + image.message);
    }
    image.format = PNG_FORMAT_RGB;
    const int h = static_cast<int>(image.height);
    const int w = static_cast<int>(image.width);
    if (clip.t == 0) {
      clip.h = h;
      clip.w = w;
    } else if (h != clip.h || w != clip.w) {
      png_image_free(&image);
      throw Error(ErrorKind::kDimension, frame.string() + ": frame size differs from first frame");
    }
    const std::size_t offset = clip.data.size();
    clip.data.resize(offset + PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, clip.data.data() + offset, 0, nullptr)) {
      throw Error(ErrorKind::kIo, frame.string() + ": " + image.message);
    }
    ++clip.t;
  }
  clip.Validate();
  return clip;
}

void WritePngClip(const std::filesystem::path& dir, const FrameClip& clip) {
  clip.Validate();
  std::filesystem::create_directories(dir);
  const std::size_t frame_bytes = static_cast<std::size_t>(clip.h) * clip.w * 3;
  for (int f = 0; f < clip.t; ++f) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(clip.w);
    image.height = static_cast<png_uint_32>(clip.h);
    image.format = PNG_FORMAT_RGB;
    png_alloc_size_t size = 0;
    const void* pixels = clip.data.data() + f * frame_bytes;
    if (!png_image_write_to_memory(&image, nullptr, &size, 0, pixels, 0, nullptr)) {
      throw Error(ErrorKind::kIo, "cannot encode PNG: " + std::string(image.message));
    }
    std::string buffer(size, '\0');
    if (!png_image_write_to_memory(&image, buffer.data(), &size, 0, pixels, 0, nullptr)) {
      throw Error(ErrorKind::kIo, "cannot encode PNG: " + std::string(image.message));
    }
    buffer.resize(size);
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%05d.png", f);
    WriteFileAtomic(dir / name, buffer);
  }
}

LabelVector ParseLabelSidecar(std::string_view text, const Taxonomy& taxonomy,
                              std::string_view origin) {
  LabelVector labels = LabelVector::Zero();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      labels(taxonomy.IndexOfName(line)) = 1;
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(origin) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return labels;
}

std::string FormatLabelSidecar(const LabelVector& labels, const Taxonomy& taxonomy) {
  std::string out;
  for (int c = 0; c < kNumClasses; ++c) {
    if (labels(c)) out += taxonomy.name(c) + '\n';
  }
  return out;
}

}  // namespace atomact
