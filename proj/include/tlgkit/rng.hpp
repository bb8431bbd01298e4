/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file rng.hpp
  \brief Seeded random draws that are reproducible across platforms
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace tlgkit
{

/*! \brief Deterministic random source.
 *
 * Wraps `std::mt19937_64` (whose output sequence is fixed by the standard)
 * and implements all bounded draws by rejection sampling, so that a seed
 * yields the same sequence on every platform and standard library.
 * `std::uniform_int_distribution` is implementation-defined and must not
 * be used anywhere results have to be reproducible.
 */
class Rng
{
public:
  explicit Rng( uint64_t seed ) : engine_( seed ) {}

  uint64_t next() { return engine_(); }

  /*! \brief Uniform draw from [0, n). */
  uint64_t below( uint64_t n )
  {
    if ( n == 0 )
    {
      throw std::invalid_argument( "Rng::below: empty range" );
    }
    const uint64_t threshold = ( 0 - n ) % n;
    for ( ;; )
    {
      const uint64_t r = engine_();
      if ( r >= threshold )
      {
        return r % n;
      }
    }
  }

  /*! \brief Uniform draw from [lo, hi] inclusive. */
  int64_t range( int64_t lo, int64_t hi )
  {
    if ( lo > hi )
    {
      throw std::invalid_argument( "Rng::range: lo > hi" );
    }
    return lo + static_cast<int64_t>( below( static_cast<uint64_t>( hi - lo ) + 1u ) );
  }

  bool coin() { return ( engine_() & 1u ) != 0u; }

  /*! \brief k distinct indices from [0, n), in ascending order. */
  std::vector<size_t> sample_indices( size_t n, size_t k )
  {
    if ( k > n )
    {
      throw std::invalid_argument( "Rng::sample_indices: k > n" );
    }
    std::vector<size_t> pool( n );
    for ( size_t i = 0; i < n; ++i )
    {
      pool[i] = i;
    }
    // partial Fisher-Yates, then sort the chosen prefix
    for ( size_t i = 0; i < k; ++i )
    {
      const size_t j = i + static_cast<size_t>( below( n - i ) );
      std::swap( pool[i], pool[j] );
    }
    pool.resize( k );
    std::sort( pool.begin(), pool.end() );
    return pool;
  }

private:
  std::mt19937_64 engine_;
};

/*! \brief Mixes a stream id into a base seed (splitmix64 finalizer). */
inline uint64_t derive_seed( uint64_t seed, uint64_t stream )
{
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * ( stream + 1u );
  z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
  return z ^ ( z >> 31 );
}

} // namespace tlgkit
