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

#ifndef ATOMACT_CLIP_IO_H_
#define ATOMACT_CLIP_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "atomact/augmentation.h"
#include "atomact/taxonomy.h"

namespace atomact {

// Raw clip file: a 16-byte header followed by the pixels in planar order.
//
//   offset 0   4 bytes  magic "ACLP"
//   offset 4   u32 LE   T (frames)
//   offset 8   u32 LE   H
//   offset 12  u32 LE   W
//   offset 16  T*3*H*W bytes, ordered [frame][channel][y][x]
inline constexpr char kRawClipMagic[4] = {'A', 'C', 'L', 'P'};
inline constexpr std::string_view kRawClipExtension = ".clip";

std::string EncodeRawClip(const FrameClip& clip);
FrameClip DecodeRawClip(std::string_view bytes, std::string clip_id);
FrameClip ReadRawClip(const std::filesystem::path& path);
void WriteRawClip(const std::filesystem::path& path, const FrameClip& clip);

// A directory of 8-bit RGB PNG frames, ordered by filename. All frames must
// share one size. The clip id is the directory name.
FrameClip ReadPngClip(const std::filesystem::path& dir);
// Writes frame_00000.png, frame_00001.png, ... into `dir`.
void WritePngClip(const std::filesystem::path& dir, const FrameClip& clip);

// Label sidecar "<clip_id>.labels": one canonical class name per line.
LabelVector ParseLabelSidecar(std::string_view text, const Taxonomy& taxonomy,
                              std::string_view origin = "<labels>");
std::string FormatLabelSidecar(const LabelVector& labels, const Taxonomy& taxonomy);

}  // namespace atomact

#endif  // ATOMACT_CLIP_IO_H_
