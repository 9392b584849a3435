#pragma once

#include <atomic>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace diffcolor {

inline std::string strf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list copy;
    va_copy(copy, args);
    int n = std::vsnprintf(nullptr, 0, fmt, copy);
    va_end(copy);
    std::string s(n > 0 ? n : 0, '\0');
    if (n > 0) {
        std::vsnprintf(s.data(), s.size() + 1, fmt, args);
    }
    va_end(args);
    return s;
}

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

inline std::atomic<int>& log_level_ref() {
    static std::atomic<int> level{static_cast<int>(LogLevel::info)};
    return level;
}

inline void set_log_level(LogLevel level) {
    log_level_ref().store(static_cast<int>(level));
}

// Structured single-line logs: "[warn] msg key=value ..."
inline void log_line(LogLevel level, const char* fmt, ...) {
    if (static_cast<int>(level) < log_level_ref().load()) {
        return;
    }
    static const char* names[] = {"debug", "info", "warn", "error"};
    va_list args;
    va_start(args, fmt);
    std::fprintf(stderr, "[%s] ", names[static_cast<int>(level)]);
    std::vfprintf(stderr, fmt, args);
    std::fprintf(stderr, "\n");
    va_end(args);
}

}  // namespace diffcolor
