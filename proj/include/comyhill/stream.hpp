#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace comyhill {

// Lazily generated, memoized infinite sequence. Forcing index n forces 0..n in
// order; the generator may look at the previous cell. No lock is held while
// the generator runs, so concurrent forcers may compute the same cell twice;
// the first write wins and purity makes the duplicate harmless.
template <class T>
class Stream {
public:
    using Gen = std::function<T(std::size_t)>;
    using Step = std::function<T(std::size_t, const T* prev)>;

    Stream() : Stream(Gen([](std::size_t) { return T{}; })) {}

    explicit Stream(Gen g)
        : p_(std::make_shared<Cell>(
              [g = std::move(g)](std::size_t k, const T*) { return g(k); })) {}

    static Stream corec(Step s) {
        Stream out;
        out.p_ = std::make_shared<Cell>(std::move(s));
        return out;
    }

    static Stream constant(T v) {
        return Stream(Gen([v](std::size_t) { return v; }));
    }

    static Stream from_prefix(std::vector<T> pre, T fill) {
        return Stream(Gen([pre = std::move(pre), fill](std::size_t k) {
            return k < pre.size() ? pre[k] : fill;
        }));
    }

    T at(std::size_t n) const {
        Cell& c = *p_;
        for (;;) {
            std::size_t k;
            T prev{};
            bool has_prev = false;
            {
                std::lock_guard<std::mutex> lk(c.mu);
                if (n < c.memo.size()) return c.memo[n];
                k = c.memo.size();
                if (k > 0) {
                    prev = c.memo[k - 1];
                    has_prev = true;
                }
            }
            T v = c.step(k, has_prev ? &prev : nullptr);
            std::lock_guard<std::mutex> lk(c.mu);
            if (c.memo.size() == k) c.memo.push_back(std::move(v));
        }
    }

    T operator[](std::size_t n) const { return at(n); }

    std::vector<T> prefix(std::size_t n) const {
        std::vector<T> out;
        out.reserve(n);
        if (n > 0) at(n - 1);
        for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
        return out;
    }

    std::size_t forced() const {
        std::lock_guard<std::mutex> lk(p_->mu);
        return p_->memo.size();
    }

    template <class F>
    auto map(F f) const -> Stream<decltype(f(std::declval<T>()))> {
        using U = decltype(f(std::declval<T>()));
        Stream self = *this;
        return Stream<U>(typename Stream<U>::Gen(
            [self, f](std::size_t k) { return f(self.at(k)); }));
    }

    Stream drop(std::size_t n) const {
        Stream self = *this;
        return Stream(Gen([self, n](std::size_t k) { return self.at(k + n); }));
    }

private:
    struct Cell {
        explicit Cell(Step s) : step(std::move(s)) {}
        Step step;
        std::mutex mu;
        std::vector<T> memo;
    };
    std::shared_ptr<Cell> p_;
};

using BitStream = Stream<unsigned char>;
using NatStream = Stream<unsigned long long>;

}  // namespace comyhill
