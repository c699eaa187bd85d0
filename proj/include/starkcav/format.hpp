// format.hpp — deterministic text formatting for CSV and config output

#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

namespace starkcav {

// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text) {
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw std::invalid_argument("parse_double: bad number '" + text + "'");
    }
    return v;
}

}  // namespace starkcav
