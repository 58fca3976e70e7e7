#pragma once

#include <fmtlab/structure.hpp>

#include <string>

namespace fmtlab
{
    /// Classification flags of a homomorphism f : A -> B.
    ///
    /// strong: f(a) in R^B implies a in R^A for every tuple a over A.
    /// full: surjective, and every tuple of B is the image of a tuple of A.
    /// embedding: injective and strong.
    struct HomKind
    {
        bool injective = false;
        bool surjective = false;
        bool strong = false;
        bool full = false;
        bool embedding = false;

        friend auto operator== (const HomKind &, const HomKind &) -> bool = default;
    };

    auto is_homomorphism(const Structure & source, const Structure & target, const Mapping & map) -> bool;

    /// Throws NotAHomomorphism if the map does not preserve every relation.
    auto classify(const Structure & source, const Structure & target, const Mapping & map) -> HomKind;

    /// A validated total map between two structures with its cached classification.
    class Homomorphism
    {
        public:
            /// Validates the map; throws NotAHomomorphism (or VocabularyMismatch).
            Homomorphism(Structure source, Structure target, Mapping map);

            static auto identity(const Structure & s) -> Homomorphism;

            auto source() const -> const Structure & { return _source; }
            auto target() const -> const Structure & { return _target; }
            auto map() const -> const Mapping & { return _map; }
            auto operator() (int a) const -> int { return _map.at(a); }
            auto kind() const -> const HomKind & { return _kind; }

            /// after o this.
            auto then(const Homomorphism & after) const -> Homomorphism;

            auto to_string() const -> std::string;

        private:
            Structure _source, _target;
            Mapping _map;
            HomKind _kind;
    };
}
