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

#include <catch2/catch_amalgamated.hpp>

#include <tlgkit/rng.hpp>
#include <tlgkit/threshold_identification.hpp>

#include <bit>
#include <unordered_set>

using namespace tlgkit;

namespace
{

/*! Builds the truth table induced by a weight vector and threshold. */
TruthTable table_of( const std::vector<int>& weights, int threshold )
{
  TruthTable tt( static_cast<int>( weights.size() ) );
  for ( uint32_t m = 0; m < tt.num_bits(); ++m )
  {
    int sum = 0;
    for ( size_t i = 0; i < weights.size(); ++i )
    {
      if ( ( m >> i ) & 1u )
      {
        sum += weights[i];
      }
    }
    tt.set_bit( m, sum >= threshold );
  }
  return tt;
}

/*! Exhausts an integer weight box to decide realizability independently.
 *
 * Every n-variable threshold function for n <= 4 has an integer realization
 * with weights in [-3, 3], so a [-4, 4] box together with the full range of
 * useful thresholds is a complete reference decision procedure.
 */
std::unordered_set<uint64_t> threshold_tables_by_search( int n, int box )
{
  std::unordered_set<uint64_t> tables;
  std::vector<int> w( n, -box );
  const int max_abs_sum = n * box;
  while ( true )
  {
    for ( int t = -max_abs_sum; t <= max_abs_sum + 1; ++t )
    {
      uint64_t bits = 0;
      for ( uint32_t m = 0; m < ( 1u << n ); ++m )
      {
        int sum = 0;
        for ( int i = 0; i < n; ++i )
        {
          if ( ( m >> i ) & 1u )
          {
            sum += w[i];
          }
        }
        if ( sum >= t )
        {
          bits |= uint64_t( 1 ) << m;
        }
      }
      tables.insert( bits );
    }
    int i = 0;
    while ( i < n && w[i] == box )
    {
      w[i] = -box;
      ++i;
    }
    if ( i == n )
    {
      break;
    }
    ++w[i];
  }
  return tables;
}

} // namespace

TEST_CASE( "standard gates get their textbook realizations" )
{
  const auto a = TruthTable::nth_var( 2, 0 );
  const auto b = TruthTable::nth_var( 2, 1 );

  SECTION( "two-input conjunction" )
  {
    const auto tf = identify_threshold( a & b );
    REQUIRE( tf );
    CHECK( tf->weights == std::vector<int>{ 1, 1 } );
    CHECK( tf->threshold == 2 );
  }

  SECTION( "two-input disjunction" )
  {
    const auto tf = identify_threshold( a | b );
    REQUIRE( tf );
    CHECK( tf->weights == std::vector<int>{ 1, 1 } );
    CHECK( tf->threshold == 1 );
  }

  SECTION( "three-input conjunction has unit weights and threshold three" )
  {
    const auto tt = TruthTable::nth_var( 3, 0 ) & TruthTable::nth_var( 3, 1 ) &
                    TruthTable::nth_var( 3, 2 );
    const auto tf = identify_threshold( tt );
    REQUIRE( tf );
    CHECK( tf->weights == std::vector<int>{ 1, 1, 1 } );
    CHECK( tf->threshold == 3 );
  }

  SECTION( "majority of three" )
  {
    const auto tf = identify_threshold( TruthTable::from_bits( 3, 0xe8 ) );
    REQUIRE( tf );
    CHECK( tf->weights == std::vector<int>{ 1, 1, 1 } );
    CHECK( tf->threshold == 2 );
  }

  SECTION( "negated inputs turn weights negative" )
  {
    const auto tf = identify_threshold( ~( a & b ) );
    REQUIRE( tf );
    CHECK( tf->weights == std::vector<int>{ -1, -1 } );
    CHECK( tf->threshold == -1 );
    CHECK( ThresholdIdentifier::realizes( ~( a & b ), *tf ) );
  }

  SECTION( "single inverter" )
  {
    const auto tf = identify_threshold( ~TruthTable::nth_var( 1, 0 ) );
    REQUIRE( tf );
    CHECK( tf->weights == std::vector<int>{ -1 } );
    CHECK( tf->threshold == 0 );
  }
}

TEST_CASE( "constants and vacuous variables" )
{
  const auto c0 = identify_threshold( TruthTable::constant( 3, false ) );
  REQUIRE( c0 );
  CHECK( c0->weights == std::vector<int>{ 0, 0, 0 } );
  CHECK( ThresholdIdentifier::realizes( TruthTable::constant( 3, false ), *c0 ) );

  const auto c1 = identify_threshold( TruthTable::constant( 3, true ) );
  REQUIRE( c1 );
  CHECK( ThresholdIdentifier::realizes( TruthTable::constant( 3, true ), *c1 ) );

  // f = x0 inside a three-variable table: the others get weight zero
  const auto proj = identify_threshold( TruthTable::nth_var( 3, 0 ) );
  REQUIRE( proj );
  CHECK( proj->weights == std::vector<int>{ 1, 0, 0 } );
  CHECK( proj->threshold == 1 );
}

TEST_CASE( "binate functions are rejected" )
{
  const auto a = TruthTable::nth_var( 2, 0 );
  const auto b = TruthTable::nth_var( 2, 1 );
  CHECK_FALSE( identify_threshold( a ^ b ) );
  CHECK_FALSE( identify_threshold( ~( a ^ b ) ) );
}

TEST_CASE( "the two-pair disjunction is unate but not threshold" )
{
  const auto x0 = TruthTable::nth_var( 4, 0 );
  const auto x1 = TruthTable::nth_var( 4, 1 );
  const auto x2 = TruthTable::nth_var( 4, 2 );
  const auto x3 = TruthTable::nth_var( 4, 3 );
  const auto f = ( x0 & x1 ) | ( x2 & x3 );

  for ( int i = 0; i < 4; ++i )
  {
    CHECK( f.is_positive_unate_in( i ) );
  }
  CHECK_FALSE( identify_threshold( f ) );
}

TEST_CASE( "exactly 14 of the 16 two-variable functions are threshold" )
{
  ThresholdIdentifier ident;
  int count = 0;
  for ( uint64_t bits = 0; bits < 16; ++bits )
  {
    const auto tt = TruthTable::from_bits( 2, bits );
    const auto tf = ident.identify( tt );
    if ( tf )
    {
      ++count;
      CHECK( ThresholdIdentifier::realizes( tt, *tf ) );
    }
    else
    {
      // the only misses are parity and its complement
      CHECK( ( bits == 0x6 || bits == 0x9 ) );
    }
  }
  CHECK( count == 14 );
}

TEST_CASE( "exactly 104 of the 256 three-variable functions are threshold" )
{
  const auto reference = threshold_tables_by_search( 3, 3 );
  ThresholdIdentifier ident;
  int count = 0;
  for ( uint64_t bits = 0; bits < 256; ++bits )
  {
    const auto tt = TruthTable::from_bits( 3, bits );
    const auto tf = ident.identify( tt );
    CHECK( tf.has_value() == ( reference.count( bits ) > 0 ) );
    if ( tf )
    {
      ++count;
      CHECK( ThresholdIdentifier::realizes( tt, *tf ) );
    }
  }
  CHECK( count == 104 );
}

TEST_CASE( "identification agrees with exhaustive search on all 4-variable functions" )
{
  const auto reference = threshold_tables_by_search( 4, 4 );
  ThresholdIdentifier ident;
  int count = 0;
  for ( uint64_t bits = 0; bits < 65536; ++bits )
  {
    const auto tt = TruthTable::from_bits( 4, bits );
    const auto tf = ident.identify( tt );
    REQUIRE( tf.has_value() == ( reference.count( bits ) > 0 ) );
    if ( tf )
    {
      ++count;
      REQUIRE( ThresholdIdentifier::realizes( tt, *tf ) );
    }
  }
  CHECK( count == 1882 );
}

TEST_CASE( "wider majorities and counting thresholds" )
{
  // five-input majority: all-ones weights, threshold three
  TruthTable maj5( 5 );
  for ( uint32_t m = 0; m < 32; ++m )
  {
    maj5.set_bit( m, std::popcount( m ) >= 3 );
  }
  const auto tf = identify_threshold( maj5 );
  REQUIRE( tf );
  CHECK( tf->weights == std::vector<int>{ 1, 1, 1, 1, 1 } );
  CHECK( tf->threshold == 3 );

  // at-least-two-of-six
  TruthTable count2( 6 );
  for ( uint32_t m = 0; m < 64; ++m )
  {
    count2.set_bit( m, std::popcount( m ) >= 2 );
  }
  const auto tf2 = identify_threshold( count2 );
  REQUIRE( tf2 );
  CHECK( tf2->weights == std::vector<int>{ 1, 1, 1, 1, 1, 1 } );
  CHECK( tf2->threshold == 2 );
}

TEST_CASE( "random weighted functions round trip" )
{
  Rng rng( 99 );
  ThresholdIdentifier ident;
  for ( int round = 0; round < 300; ++round )
  {
    const int n = 2 + static_cast<int>( rng.below( 4 ) );
    std::vector<int> w( n );
    for ( auto& wi : w )
    {
      wi = static_cast<int>( rng.range( -4, 4 ) );
    }
    const int max_sum = 4 * n;
    const int t = static_cast<int>( rng.range( -max_sum, max_sum + 1 ) );

    const auto tt = table_of( w, t );
    const auto tf = ident.identify( tt );
    REQUIRE( tf );
    CHECK( ThresholdIdentifier::realizes( tt, *tf ) );
  }
}

TEST_CASE( "found weight totals are minimal for known functions" )
{
  // 2-of-3 with a doubled first input: x0 OR (x1 AND x2)
  const auto x0 = TruthTable::nth_var( 3, 0 );
  const auto x1 = TruthTable::nth_var( 3, 1 );
  const auto x2 = TruthTable::nth_var( 3, 2 );
  const auto f = x0 | ( x1 & x2 );
  const auto tf = identify_threshold( f );
  REQUIRE( tf );
  CHECK( tf->weights == std::vector<int>{ 2, 1, 1 } );
  CHECK( tf->threshold == 2 );
}
