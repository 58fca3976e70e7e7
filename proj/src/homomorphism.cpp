#include <fmtlab/homomorphism.hpp>
#include <fmtlab/error.hpp>

#include <map>
#include <sstream>

using std::size_t;
using std::vector;

namespace fmtlab
{
    namespace
    {
        auto check_shapes(const Structure & source, const Structure & target, const Mapping & map) -> void
        {
            if (! (source.vocabulary() == target.vocabulary()))
                throw VocabularyMismatch("homomorphism between structures over different vocabularies");
            if (map.size() != static_cast<size_t>(source.size()))
                throw NotAHomomorphism("map is not total on the source domain");
            for (int x : map)
                if (x < 0 || x >= target.size())
                    throw NotAHomomorphism("map sends an element outside the target domain");
        }

        auto image_of(const Tuple & t, const Mapping & map) -> Tuple
        {
            Tuple result(t.size());
            for (size_t i = 0 ; i < t.size() ; ++i)
                result[i] = map[t[i]];
            return result;
        }

        // Strongness: every target tuple whose entries all lie in the image must
        // be the image of some source tuple built from the corresponding preimages.
        auto is_strong(const Structure & source, const Structure & target, const Mapping & map) -> bool
        {
            vector<vector<int>> preimages(target.size());
            for (size_t a = 0 ; a < map.size() ; ++a)
                preimages[map[a]].push_back(static_cast<int>(a));

            for (size_t r = 0 ; r < target.vocabulary().size() ; ++r) {
                for (auto & bt : target.tuples(r)) {
                    bool in_image = true;
                    for (int b : bt)
                        if (preimages[b].empty())
                            in_image = false;
                    if (! in_image)
                        continue;

                    // every combination of preimages must be a source tuple
                    Tuple at(bt.size());
                    vector<size_t> choice(bt.size(), 0);
                    while (true) {
                        for (size_t i = 0 ; i < bt.size() ; ++i)
                            at[i] = preimages[bt[i]][choice[i]];
                        if (! source.holds(r, at))
                            return false;
                        size_t i = 0;
                        for ( ; i < bt.size() ; ++i) {
                            if (++choice[i] < preimages[bt[i]].size())
                                break;
                            choice[i] = 0;
                        }
                        if (i == bt.size())
                            break;
                    }
                }
            }
            return true;
        }
    }

    auto is_homomorphism(const Structure & source, const Structure & target, const Mapping & map) -> bool
    {
        check_shapes(source, target, map);
        for (size_t r = 0 ; r < source.vocabulary().size() ; ++r)
            for (auto & t : source.tuples(r))
                if (! target.holds(r, image_of(t, map)))
                    return false;
        return true;
    }

    auto classify(const Structure & source, const Structure & target, const Mapping & map) -> HomKind
    {
        if (! is_homomorphism(source, target, map))
            throw NotAHomomorphism("map does not preserve every relation");

        HomKind kind;
        vector<int> hits(target.size(), 0);
        for (int b : map)
            ++hits[b];
        kind.injective = true;
        kind.surjective = true;
        for (int h : hits) {
            if (h > 1)
                kind.injective = false;
            if (h == 0)
                kind.surjective = false;
        }

        kind.full = kind.surjective;
        if (kind.full) {
            for (size_t r = 0 ; r < target.vocabulary().size() && kind.full ; ++r) {
                std::map<Tuple, bool> covered;
                for (auto & t : source.tuples(r))
                    covered[image_of(t, map)] = true;
                for (auto & bt : target.tuples(r))
                    if (! covered.contains(bt)) {
                        kind.full = false;
                        break;
                    }
            }
        }

        kind.strong = is_strong(source, target, map);
        kind.embedding = kind.injective && kind.strong;
        return kind;
    }

    Homomorphism::Homomorphism(Structure source, Structure target, Mapping map) :
        _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)),
        _kind(classify(_source, _target, _map))
    {
    }

    auto Homomorphism::identity(const Structure & s) -> Homomorphism
    {
        Mapping map(s.size());
        for (int i = 0 ; i < s.size() ; ++i)
            map[i] = i;
        return Homomorphism{ s, s, std::move(map) };
    }

    auto Homomorphism::then(const Homomorphism & after) const -> Homomorphism
    {
        if (! (after.source() == _target))
            throw std::invalid_argument("homomorphisms are not composable");
        Mapping composed(_map.size());
        for (size_t i = 0 ; i < _map.size() ; ++i)
            composed[i] = after(_map[i]);
        return Homomorphism{ _source, after.target(), std::move(composed) };
    }

    auto Homomorphism::to_string() const -> std::string
    {
        std::ostringstream out;
        for (size_t i = 0 ; i < _map.size() ; ++i)
            out << (i ? " " : "") << i << "->" << _map[i];
        return out.str();
    }
}
