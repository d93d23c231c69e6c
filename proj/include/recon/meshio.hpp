// Copyright 2026 The sweeprecon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "recon/sweepmesh.hpp"
#include "recon/texture.hpp"

namespace recon {

// Writes the mesh as OBJ + MTL. Line order: mtllib, usemtl, all v, all vt,
// all vn, all f a/a/a. Numbers carry exactly 6 decimals, '.' separator, no
// exponent; LF endings. Output bytes depend only on the inputs.
// Throws IoError and InvalidParams (bad material name).
void write_obj(const TriangleMesh& mesh, const Material& material,
               const std::string& obj_path, const std::string& mtl_path);

// Reads a file produced by write_obj. Any statement outside that subset,
// non-triangle faces, or indices outside 1..count raise ParseError with the
// offending line number.
TriangleMesh read_obj(const std::string& path);

}  // namespace recon
