#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lipcert/errors.hpp"

namespace lipcert {

/// Ordered list of distinct variable names. The order is fixed at creation;
/// contexts are immutable and cheap to copy (shared storage).
class VarContext {
public:
    VarContext() : impl_(empty_impl()) {}

    explicit VarContext(std::vector<std::string> names) {
        auto impl = std::make_shared<Impl>();
        impl->names = std::move(names);
        for (size_t i = 0; i < impl->names.size(); ++i) {
            const auto& n = impl->names[i];
            if (n.empty()) throw Error("empty variable name");
            if (!impl->index.emplace(n, i).second)
                throw Error("duplicate variable '" + n + "'");
        }
        impl_ = std::move(impl);
    }

    size_t size() const { return impl_->names.size(); }
    const std::vector<std::string>& names() const { return impl_->names; }
    const std::string& name(size_t i) const { return impl_->names.at(i); }

    std::optional<size_t> index_of(const std::string& name) const {
        auto it = impl_->index.find(name);
        if (it == impl_->index.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const std::string& name) const { return impl_->index.count(name) > 0; }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.impl_ == b.impl_ || a.impl_->names == b.impl_->names;
    }
    friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

private:
    struct Impl {
        std::vector<std::string> names;
        std::map<std::string, size_t> index;
    };

    static std::shared_ptr<const Impl> empty_impl() {
        static const auto e = std::make_shared<Impl>();
        return e;
    }

    std::shared_ptr<const Impl> impl_;
};

inline void require_same_context(const VarContext& a, const VarContext& b, const char* where) {
    if (a != b) throw ContextMismatchError(std::string(where) + ": variable contexts differ");
}

}  // namespace lipcert
