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

#include "recon/meshio.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "recon/errors.hpp"

namespace recon {

namespace {

// Locale-independent fixed formatting, exactly 6 decimals, never exponent.
void append_fixed(std::string& out, double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, 6);
  out.append(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path);
}

bool valid_material_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

}  // namespace

void write_obj(const TriangleMesh& mesh, const Material& material,
               const std::string& obj_path, const std::string& mtl_path) {
  if (!valid_material_name(material.name))
    throw InvalidParams("material name must be non-empty without whitespace");

  std::string obj;
  obj.reserve(mesh.vertices.size() * 96 + mesh.triangles.size() * 32 + 64);
  obj += "mtllib ";
  obj += std::filesystem::path(mtl_path).filename().string();
  obj += "\nusemtl ";
  obj += material.name;
  obj += "\n";
  for (const Vec3& v : mesh.vertices) {
    obj += "v ";
    append_fixed(obj, v.x);
    obj += ' ';
    append_fixed(obj, v.y);
    obj += ' ';
    append_fixed(obj, v.z);
    obj += '\n';
  }
  for (const UV& t : mesh.uvs) {
    obj += "vt ";
    append_fixed(obj, t.u);
    obj += ' ';
    append_fixed(obj, t.v);
    obj += '\n';
  }
  for (const Vec3& n : mesh.normals) {
    obj += "vn ";
    append_fixed(obj, n.x);
    obj += ' ';
    append_fixed(obj, n.y);
    obj += ' ';
    append_fixed(obj, n.z);
    obj += '\n';
  }
  char face[64];
  for (const Triangle& t : mesh.triangles) {
    std::snprintf(face, sizeof(face), "f %u/%u/%u %u/%u/%u %u/%u/%u\n",
                  t.a + 1, t.a + 1, t.a + 1, t.b + 1, t.b + 1, t.b + 1,
                  t.c + 1, t.c + 1, t.c + 1);
    obj += face;
  }
  write_file(obj_path, obj);

  std::string mtl = "newmtl " + material.name + "\nmap_Kd " +
                    material.diffuse_map + "\n";
  write_file(mtl_path, mtl);
}

namespace {

double parse_double(const std::string& token, int line_no) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  double value = 0.0;
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw ParseError(line_no, "bad number \"" + token + "\"");
  return value;
}

// "a/a/a" with matching 1-based indices, as write_obj emits.
std::uint32_t parse_face_corner(const std::string& token, int line_no,
                                std::size_t vertex_count) {
  long v = -1, vt = -1, vn = -1;
  if (std::sscanf(token.c_str(), "%ld/%ld/%ld", &v, &vt, &vn) != 3)
    throw ParseError(line_no, "face corner must be v/vt/vn");
  if (v < 1 || vt < 1 || vn < 1)
    throw ParseError(line_no, "OBJ indices are 1-based");
  if (v != vt || v != vn)
    throw ParseError(line_no, "v/vt/vn indices must match");
  if (static_cast<std::size_t>(v) > vertex_count)
    throw ParseError(line_no, "index out of range");
  return static_cast<std::uint32_t>(v - 1);
}

}  // namespace

TriangleMesh read_obj(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  TriangleMesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) throw ParseError(line_no, "blank line");

    auto next = [&ss, line_no]() {
      std::string token;
      if (!(ss >> token)) throw ParseError(line_no, "missing field");
      return token;
    };
    auto expect_end = [&ss, line_no]() {
      std::string extra;
      if (ss >> extra)
        throw ParseError(line_no, "unexpected trailing \"" + extra + "\"");
    };

    if (keyword == "mtllib" || keyword == "usemtl") {
      next();
      expect_end();
    } else if (keyword == "v") {
      Vec3 v{parse_double(next(), line_no), parse_double(next(), line_no),
             parse_double(next(), line_no)};
      expect_end();
      mesh.vertices.push_back(v);
    } else if (keyword == "vt") {
      UV t{parse_double(next(), line_no), parse_double(next(), line_no)};
      expect_end();
      mesh.uvs.push_back(t);
    } else if (keyword == "vn") {
      Vec3 n{parse_double(next(), line_no), parse_double(next(), line_no),
             parse_double(next(), line_no)};
      expect_end();
      mesh.normals.push_back(n);
    } else if (keyword == "f") {
      Triangle t;
      t.a = parse_face_corner(next(), line_no, mesh.vertices.size());
      t.b = parse_face_corner(next(), line_no, mesh.vertices.size());
      t.c = parse_face_corner(next(), line_no, mesh.vertices.size());
      std::string extra;
      if (ss >> extra)
        throw ParseError(line_no, "only triangle faces are supported");
      mesh.triangles.push_back(t);
    } else {
      throw ParseError(line_no, "unsupported statement \"" + keyword + "\"");
    }
  }
  if (mesh.uvs.size() != mesh.vertices.size() ||
      mesh.normals.size() != mesh.vertices.size())
    throw ParseError(line_no, "v/vt/vn counts differ");
  return mesh;
}

}  // namespace recon
