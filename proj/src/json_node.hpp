// Copyright 2026 The parkfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Strict, path-tracking access to parsed JSON documents; shared by the
// scenario and config loaders. Not installed.

#ifndef PARKFIELD__JSON_NODE_HPP_
#define PARKFIELD__JSON_NODE_HPP_

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "parkfield/errors.hpp"
#include "parkfield/geometry.hpp"

namespace parkfield
{

using json = nlohmann::json;

/// Parses JSON text, allowing comments. Syntax errors become ParseError.
inline json parse_json_text(std::string_view text)
{
  try {
    return json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error & e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

class Node
{
public:
  Node(const json & value, std::string path) : value_(value), path_(std::move(path)) {}

  const json & value() const { return value_; }
  const std::string & path() const { return path_; }

  [[noreturn]] void fail(const std::string & what) const { throw ParseError(path_, what); }

  void allow_keys(std::initializer_list<std::string_view> keys) const
  {
    expect_object();
    for (const auto & item : value_.items()) {
      if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
        Node(item.value(), path_ + "/" + item.key()).fail("unknown key");
      }
    }
  }

  void expect_object() const
  {
    if (!value_.is_object()) {
      fail("expected an object");
    }
  }

  bool has(std::string_view key) const { return value_.contains(key); }

  Node child(std::string_view key) const
  {
    expect_object();
    const auto it = value_.find(key);
    if (it == value_.end()) {
      fail("missing required key '" + std::string(key) + "'");
    }
    return Node(*it, path_ + "/" + std::string(key));
  }

  std::optional<Node> optional_child(std::string_view key) const
  {
    expect_object();
    const auto it = value_.find(key);
    if (it == value_.end()) {
      return std::nullopt;
    }
    return Node(*it, path_ + "/" + std::string(key));
  }

  std::vector<Node> elements() const
  {
    if (!value_.is_array()) {
      fail("expected an array");
    }
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      out.emplace_back(value_[i], path_ + "/" + std::to_string(i));
    }
    return out;
  }

  double number() const
  {
    if (!value_.is_number()) {
      fail("expected a number");
    }
    const double v = value_.get<double>();
    if (!std::isfinite(v)) {
      fail("number is not finite");
    }
    return v;
  }

  double positive() const
  {
    const double v = number();
    if (!(v > 0.0)) {
      fail("must be positive");
    }
    return v;
  }

  std::string string() const
  {
    if (!value_.is_string()) {
      fail("expected a string");
    }
    return value_.get<std::string>();
  }

  bool boolean() const
  {
    if (!value_.is_boolean()) {
      fail("expected a boolean");
    }
    return value_.get<bool>();
  }

  Point2 point() const
  {
    const auto xy = elements();
    if (xy.size() != 2) {
      fail("expected a point [x, y]");
    }
    return {xy[0].number(), xy[1].number()};
  }

  std::vector<Point2> points() const
  {
    std::vector<Point2> out;
    for (const auto & e : elements()) {
      out.push_back(e.point());
    }
    return out;
  }

private:
  const json & value_;
  std::string path_;
};

}  // namespace parkfield

#endif  // PARKFIELD__JSON_NODE_HPP_
