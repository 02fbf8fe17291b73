#pragma once

#include <utility>

namespace wsn {

/// Non-owning bound callable: an object pointer plus a stub that forwards to
/// a member function chosen at compile time. Trivially copyable, never
/// allocates, no virtual dispatch. The bound object must outlive every call.
template <typename Signature>
class Delegate;

template <typename R, typename... Args>
class Delegate<R(Args...)> {
 public:
  Delegate() = default;

  template <auto Method, typename T>
  static Delegate bind(T* obj) {
    Delegate d;
    d.obj_ = obj;
    d.stub_ = [](void* o, Args... args) -> R {
      return (static_cast<T*>(o)->*Method)(std::forward<Args>(args)...);
    };
    return d;
  }

  /// Binds a function object by pointer (the functor is not copied).
  template <typename F>
  static Delegate functor(F* f) {
    Delegate d;
    d.obj_ = f;
    d.stub_ = [](void* o, Args... args) -> R {
      return (*static_cast<F*>(o))(std::forward<Args>(args)...);
    };
    return d;
  }

  R operator()(Args... args) const { return stub_(obj_, std::forward<Args>(args)...); }

  explicit operator bool() const { return stub_ != nullptr; }
  void reset() { obj_ = nullptr; stub_ = nullptr; }

  friend bool operator==(const Delegate& a, const Delegate& b) {
    return a.obj_ == b.obj_ && a.stub_ == b.stub_;
  }

 private:
  void* obj_ = nullptr;
  R (*stub_)(void*, Args...) = nullptr;
};

}  // namespace wsn
