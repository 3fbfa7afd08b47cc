#include <optics/families.hpp>

namespace optics {

Lens first()
{
    return {first_fn(), [](const Value& b, const Value& s) {
                return Value::pair(b, s.second());
            }};
}

Lens second()
{
    return {second_fn(), [](const Value& b, const Value& s) {
                return Value::pair(s.first(), b);
            }};
}

Prism just()
{
    return {[](const Value& s) {
                if (s.is(Value::Kind::just))
                    return Either<Value>::right(s.inner());
                if (s.is(Value::Kind::nothing))
                    return Either<Value>::left(Value::nothing());
                throw bad_value_access{"just: expected Maybe, got " +
                                       s.to_string()};
            },
            [](const Value& b) { return Value::just(b); }};
}

Prism right_branch()
{
    return {[](const Value& s) {
                if (s.is(Value::Kind::right))
                    return Either<Value>::right(s.inner());
                if (s.is(Value::Kind::left))
                    return Either<Value>::left(s);
                throw bad_value_access{"right_branch: expected sum, got " +
                                       s.to_string()};
            },
            right_fn()};
}

Setter both()
{
    return {[](const Fn& h) -> Fn {
        return [h](const Value& s) {
            return Value::pair(h(s.first()), h(s.second()));
        };
    }};
}

} // namespace optics
