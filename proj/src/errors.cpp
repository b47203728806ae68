#include "wog/errors.hpp"

#include <iostream>
#include <mutex>

namespace wog {

namespace {
std::mutex handler_mutex;
WarningHandler handler;
}  // namespace

void set_warning_handler(WarningHandler h) {
    std::lock_guard lock(handler_mutex);
    handler = std::move(h);
}

void emit_warning(const std::string& message) {
    std::lock_guard lock(handler_mutex);
    if (handler) {
        handler(message);
    } else {
        std::cerr << "warning: " << message << "\n";
    }
}

}  // namespace wog
