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

#include <tlgkit/bench_io.hpp>
#include <tlgkit/simulation.hpp>

#include <bit>
#include <sstream>

using namespace tlgkit;

TEST_CASE( "simulation patterns enumerate assignments in order" )
{
  // lane v of block b is global vector number b*64+v
  for ( int var = 0; var < 10; ++var )
  {
    for ( uint64_t block = 0; block < 4; ++block )
    {
      const uint64_t w = simulation_pattern( var, block );
      for ( int lane = 0; lane < 64; ++lane )
      {
        const uint64_t vec = block * 64 + lane;
        const bool expect = ( vec >> var ) & 1u;
        CHECK( ( ( w >> lane ) & 1u ) == expect );
      }
    }
  }
}

TEST_CASE( "word evaluation agrees with scalar evaluation" )
{
  std::istringstream in( R"(
INPUT(d0)
INPUT(d1)
INPUT(d2)
INPUT(d3)
INPUT(s0)
INPUT(s1)
OUTPUT(y)
ns0 = NOT(s0)
ns1 = NOT(s1)
t0 = AND(d0, ns0, ns1)
t1 = AND(d1, s0, ns1)
t2 = AND(d2, ns0, s1)
t3 = AND(d3, s0, s1)
y = OR(t0, t1, t2, t3)
)" );
  const auto circ = parse_bench( in );
  const CircuitEvaluator eval( circ );

  // exhaustive over the 64 assignments: exactly one block of lanes
  std::vector<uint64_t> words( 6 );
  for ( int i = 0; i < 6; ++i )
  {
    words[i] = simulation_pattern( i, 0 );
  }
  const auto out_word = eval.eval_words( words )[0];

  for ( int lane = 0; lane < 64; ++lane )
  {
    const bool d0 = lane & 1, d1 = ( lane >> 1 ) & 1, d2 = ( lane >> 2 ) & 1;
    const bool d3 = ( lane >> 3 ) & 1, s0 = ( lane >> 4 ) & 1, s1 = ( lane >> 5 ) & 1;
    const bool selected = s1 ? ( s0 ? d3 : d2 ) : ( s0 ? d1 : d0 );

    CHECK( ( ( out_word >> lane ) & 1u ) == selected );
    CHECK( eval.eval( { d0, d1, d2, d3, s0, s1 } )[0] == selected );

    Assignment named{ { "d0", d0 }, { "d1", d1 }, { "d2", d2 },
                      { "d3", d3 }, { "s0", s0 }, { "s1", s1 } };
    CHECK( simulate( circ, named )[0] == selected );
  }
}

TEST_CASE( "block enumeration reaches variables past the first six" )
{
  // parity of eight inputs needs four blocks of 64 lanes
  std::ostringstream text;
  for ( int i = 0; i < 8; ++i )
  {
    text << "INPUT(x" << i << ")\n";
  }
  text << "OUTPUT(p)\n";
  text << "p = XOR(x0, x1, x2, x3, x4, x5, x6, x7)\n";
  std::istringstream in( text.str() );
  const auto circ = parse_bench( in );
  const CircuitEvaluator eval( circ );

  for ( uint64_t block = 0; block < 4; ++block )
  {
    std::vector<uint64_t> words( 8 );
    for ( int i = 0; i < 8; ++i )
    {
      words[i] = simulation_pattern( i, block );
    }
    const uint64_t out = eval.eval_words( words )[0];
    for ( int lane = 0; lane < 64; ++lane )
    {
      const uint64_t vec = block * 64 + lane;
      const bool parity = std::popcount( vec ) & 1;
      CHECK( ( ( out >> lane ) & 1u ) == parity );
    }
  }
}

TEST_CASE( "all gate kinds evaluate correctly" )
{
  std::istringstream in( R"(
INPUT(a)
INPUT(b)
OUTPUT(o_and)
OUTPUT(o_or)
OUTPUT(o_nand)
OUTPUT(o_nor)
OUTPUT(o_xor)
OUTPUT(o_xnor)
OUTPUT(o_not)
OUTPUT(o_buf)
o_and = AND(a, b)
o_or = OR(a, b)
o_nand = NAND(a, b)
o_nor = NOR(a, b)
o_xor = XOR(a, b)
o_xnor = XNOR(a, b)
o_not = NOT(a)
o_buf = BUFF(a)
)" );
  const auto circ = parse_bench( in );
  const CircuitEvaluator eval( circ );
  for ( unsigned m = 0; m < 4; ++m )
  {
    const bool a = m & 1, b = ( m >> 1 ) & 1;
    const auto out = eval.eval( { a, b } );
    CHECK( out[0] == ( a && b ) );
    CHECK( out[1] == ( a || b ) );
    CHECK( out[2] == !( a && b ) );
    CHECK( out[3] == !( a || b ) );
    CHECK( out[4] == ( a != b ) );
    CHECK( out[5] == ( a == b ) );
    CHECK( out[6] == !a );
    CHECK( out[7] == a );
  }
}
