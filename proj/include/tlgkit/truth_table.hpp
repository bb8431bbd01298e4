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
  \file truth_table.hpp
  \brief Complete truth tables over up to 8 variables

  Minterm `m` assigns variable `i` the value `(m >> i) & 1`; bit `m` of the
  table is the function value on that minterm.  Bits beyond `2^n` are kept
  zero so tables of different arity never compare equal by accident.
*/

#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace tlgkit
{

class TruthTable
{
public:
  static constexpr int max_vars = 8;

  explicit TruthTable( int num_vars = 0 ) : num_vars_( num_vars )
  {
    assert( num_vars >= 0 && num_vars <= max_vars );
    words_.fill( 0 );
  }

  /*! \brief Projection of variable `var` in an `n`-variable table. */
  static TruthTable nth_var( int n, int var )
  {
    assert( var >= 0 && var < n );
    TruthTable tt( n );
    for ( uint32_t m = 0; m < tt.num_bits(); ++m )
    {
      if ( ( m >> var ) & 1u )
      {
        tt.set_bit( m );
      }
    }
    return tt;
  }

  static TruthTable constant( int n, bool value )
  {
    TruthTable tt( n );
    if ( value )
    {
      for ( uint32_t m = 0; m < tt.num_bits(); ++m )
      {
        tt.set_bit( m );
      }
    }
    return tt;
  }

  /*! \brief Builds a table of up to 6 variables from its bit pattern. */
  static TruthTable from_bits( int n, uint64_t bits )
  {
    assert( n <= 6 );
    TruthTable tt( n );
    tt.words_[0] = bits & tt.word_mask( 0 );
    return tt;
  }

  int num_vars() const { return num_vars_; }
  uint32_t num_bits() const { return 1u << num_vars_; }

  bool bit( uint32_t m ) const
  {
    assert( m < num_bits() );
    return ( words_[m >> 6] >> ( m & 63u ) ) & 1u;
  }

  void set_bit( uint32_t m, bool value = true )
  {
    assert( m < num_bits() );
    if ( value )
    {
      words_[m >> 6] |= uint64_t( 1 ) << ( m & 63u );
    }
    else
    {
      words_[m >> 6] &= ~( uint64_t( 1 ) << ( m & 63u ) );
    }
  }

  int count_ones() const
  {
    int cnt = 0;
    for ( auto w : words_ )
    {
      cnt += std::popcount( w );
    }
    return cnt;
  }

  bool is_const0() const { return count_ones() == 0; }
  bool is_const1() const { return count_ones() == static_cast<int>( num_bits() ); }

  TruthTable operator~() const
  {
    TruthTable r( num_vars_ );
    for ( size_t i = 0; i < words_.size(); ++i )
    {
      r.words_[i] = ~words_[i] & word_mask( i );
    }
    return r;
  }

  TruthTable operator&( const TruthTable& other ) const
  {
    assert( num_vars_ == other.num_vars_ );
    TruthTable r( num_vars_ );
    for ( size_t i = 0; i < words_.size(); ++i )
    {
      r.words_[i] = words_[i] & other.words_[i];
    }
    return r;
  }

  TruthTable operator|( const TruthTable& other ) const
  {
    assert( num_vars_ == other.num_vars_ );
    TruthTable r( num_vars_ );
    for ( size_t i = 0; i < words_.size(); ++i )
    {
      r.words_[i] = words_[i] | other.words_[i];
    }
    return r;
  }

  TruthTable operator^( const TruthTable& other ) const
  {
    assert( num_vars_ == other.num_vars_ );
    TruthTable r( num_vars_ );
    for ( size_t i = 0; i < words_.size(); ++i )
    {
      r.words_[i] = words_[i] ^ other.words_[i];
    }
    return r;
  }

  bool operator==( const TruthTable& other ) const
  {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }
  bool operator!=( const TruthTable& other ) const { return !( *this == other ); }

  /*! \brief Table with variable `var` fixed to `value`, arity preserved. */
  TruthTable cofactor( int var, bool value ) const
  {
    TruthTable r( num_vars_ );
    for ( uint32_t m = 0; m < num_bits(); ++m )
    {
      uint32_t src = value ? ( m | ( 1u << var ) ) : ( m & ~( 1u << var ) );
      if ( bit( src ) )
      {
        r.set_bit( m );
      }
    }
    return r;
  }

  bool depends_on( int var ) const
  {
    return cofactor( var, false ) != cofactor( var, true );
  }

  bool is_positive_unate_in( int var ) const
  {
    const auto c0 = cofactor( var, false );
    const auto c1 = cofactor( var, true );
    for ( size_t i = 0; i < c0.words_.size(); ++i )
    {
      if ( c0.words_[i] & ~c1.words_[i] )
      {
        return false;
      }
    }
    return true;
  }

  bool is_negative_unate_in( int var ) const
  {
    const auto c0 = cofactor( var, false );
    const auto c1 = cofactor( var, true );
    for ( size_t i = 0; i < c0.words_.size(); ++i )
    {
      if ( c1.words_[i] & ~c0.words_[i] )
      {
        return false;
      }
    }
    return true;
  }

  /*! \brief Complements input `var` (swaps its cofactors). */
  TruthTable flip_var( int var ) const
  {
    TruthTable r( num_vars_ );
    for ( uint32_t m = 0; m < num_bits(); ++m )
    {
      if ( bit( m ^ ( 1u << var ) ) )
      {
        r.set_bit( m );
      }
    }
    return r;
  }

  /*! \brief Per-variable on-set counts (the vector part of the Chow parameters). */
  std::vector<int> chow() const
  {
    std::vector<int> sigma( num_vars_, 0 );
    for ( uint32_t m = 0; m < num_bits(); ++m )
    {
      if ( bit( m ) )
      {
        for ( int i = 0; i < num_vars_; ++i )
        {
          sigma[i] += ( m >> i ) & 1;
        }
      }
    }
    return sigma;
  }

  /*! \brief Re-expresses this table over a larger variable set.
   *
   * `var_map[i]` is the position of this table's variable `i` in the new
   * variable set of size `new_num_vars`.
   */
  TruthTable expand( const std::vector<int>& var_map, int new_num_vars ) const
  {
    assert( static_cast<int>( var_map.size() ) == num_vars_ );
    TruthTable r( new_num_vars );
    for ( uint32_t m = 0; m < r.num_bits(); ++m )
    {
      uint32_t src = 0;
      for ( int i = 0; i < num_vars_; ++i )
      {
        if ( ( m >> var_map[i] ) & 1u )
        {
          src |= 1u << i;
        }
      }
      if ( bit( src ) )
      {
        r.set_bit( m );
      }
    }
    return r;
  }

  uint64_t hash() const
  {
    uint64_t h = 0x9e3779b97f4a7c15ull + static_cast<uint64_t>( num_vars_ );
    for ( auto w : words_ )
    {
      h ^= w + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    }
    return h;
  }

  std::string to_binary() const
  {
    std::string s;
    for ( uint32_t m = num_bits(); m-- > 0; )
    {
      s += bit( m ) ? '1' : '0';
    }
    return s;
  }

private:
  uint64_t word_mask( size_t word ) const
  {
    if ( num_vars_ >= 6 )
    {
      return ( word < ( num_bits() >> 6 ) ) ? ~uint64_t( 0 ) : 0;
    }
    return word == 0 ? ( ( uint64_t( 1 ) << num_bits() ) - 1 ) : 0;
  }

  int num_vars_;
  std::array<uint64_t, 4> words_;
};

struct TruthTableHash
{
  size_t operator()( const TruthTable& tt ) const { return static_cast<size_t>( tt.hash() ); }
};

} // namespace tlgkit
