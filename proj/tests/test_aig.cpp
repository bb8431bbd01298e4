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

#include <tlgkit/aig.hpp>
#include <tlgkit/bench_io.hpp>
#include <tlgkit/rng.hpp>
#include <tlgkit/simulation.hpp>

#include <sstream>

using namespace tlgkit;

TEST_CASE( "literal encoding round trips" )
{
  CHECK( Aig::make_lit( 5, false ) == 10 );
  CHECK( Aig::make_lit( 5, true ) == 11 );
  CHECK( Aig::lit_node( 11 ) == 5 );
  CHECK( Aig::lit_complement( 11 ) );
  CHECK_FALSE( Aig::lit_complement( 10 ) );
  CHECK( Aig::lit_not( 10 ) == 11 );
  CHECK( Aig::lit_not( Aig::const0 ) == Aig::const1 );
}

TEST_CASE( "trivial AND cases never allocate nodes" )
{
  Aig aig;
  const auto a = aig.add_input( "a" );
  const auto b = aig.add_input( "b" );
  const auto before = aig.num_nodes();

  CHECK( aig.and2( Aig::const0, a ) == Aig::const0 );
  CHECK( aig.and2( Aig::const1, a ) == a );
  CHECK( aig.and2( a, a ) == a );
  CHECK( aig.and2( a, Aig::lit_not( a ) ) == Aig::const0 );
  CHECK( aig.num_nodes() == before );

  const auto ab = aig.and2( a, b );
  CHECK( aig.num_nodes() == before + 1 );
  CHECK( aig.and2( b, a ) == ab ); // commuted operands hit the same node
  CHECK( aig.num_nodes() == before + 1 );
}

TEST_CASE( "an XOR costs exactly three AND nodes" )
{
  Aig aig;
  const auto a = aig.add_input( "a" );
  const auto b = aig.add_input( "b" );
  const auto x = aig.xor2( a, b );
  CHECK( aig.num_ands() == 3 );
  CHECK( Aig::lit_complement( x ) ); // top node is the NOR of the two products

  // simulate all four assignments in one word
  const auto vals = aig.simulate_words( { 0xau, 0xcu } );
  CHECK( ( Aig::lit_word( vals, x ) & 0xfu ) == 0x6u );

  // XOR of a signal with itself folds to constant false
  CHECK( aig.xor2( a, a ) == Aig::const0 );
}

TEST_CASE( "wide gates become balanced trees" )
{
  Aig aig;
  std::vector<Aig::literal> lits;
  for ( int i = 0; i < 8; ++i )
  {
    lits.push_back( aig.add_input( "x" + std::to_string( i ) ) );
  }
  const auto out = aig.and_n( lits );
  aig.add_output( "y", out );
  CHECK( aig.num_ands() == 7 );
  CHECK( aig.levels()[Aig::lit_node( out )] == 3 ); // log2(8), not 7
}

TEST_CASE( "conversion preserves circuit behavior" )
{
  std::istringstream in( R"(
INPUT(a)
INPUT(b)
INPUT(c)
INPUT(d)
OUTPUT(y)
OUTPUT(z)
t1 = XOR(a, b)
t2 = NAND(c, d)
t3 = NOR(a, t2)
y = OR(t1, t3)
z = XNOR(t1, t2, c)
)" );
  const auto circ = parse_bench( in );
  const auto aig = to_aig( circ );
  CHECK( aig.num_pis() == 4 );
  CHECK( aig.num_pos() == 2 );

  const CircuitEvaluator eval( circ );
  std::vector<uint64_t> words( 4 );
  for ( int i = 0; i < 4; ++i )
  {
    words[i] = simulation_pattern( i, 0 );
  }
  const auto gate_out = eval.eval_words( words );
  const auto node_vals = aig.simulate_words( words );
  for ( size_t o = 0; o < 2; ++o )
  {
    const uint64_t got = Aig::lit_word( node_vals, aig.output_lits()[o] );
    CHECK( ( got & 0xffffu ) == ( gate_out[o] & 0xffffu ) );
  }
}

TEST_CASE( "structural hashing shares logic across gates" )
{
  std::istringstream in( R"(
INPUT(a)
INPUT(b)
OUTPUT(y)
OUTPUT(z)
y = AND(a, b)
z = NAND(a, b)
)" );
  const auto circ = parse_bench( in );
  const auto aig = to_aig( circ );
  CHECK( aig.num_ands() == 1 ); // one node serves both polarities
  CHECK( Aig::lit_node( aig.output_lits()[0] ) == Aig::lit_node( aig.output_lits()[1] ) );
}

TEST_CASE( "constant makers fold away in the graph" )
{
  // XOR(a,a) and XNOR(a,a) are the standard constant idioms
  std::istringstream in( R"(
INPUT(a)
OUTPUT(zero)
OUTPUT(one)
zero = XOR(a, a)
one = XNOR(a, a)
)" );
  const auto aig = to_aig( parse_bench( in ) );
  CHECK( aig.num_ands() == 0 );
  CHECK( aig.output_lits()[0] == Aig::const0 );
  CHECK( aig.output_lits()[1] == Aig::const1 );
}

TEST_CASE( "random circuits agree between gate-level and AIG simulation" )
{
  Rng rng( 21 );
  for ( int round = 0; round < 20; ++round )
  {
    // build a random five-input DAG out of mixed gate types
    BoolCircuit circ;
    std::vector<std::string> pool;
    for ( int i = 0; i < 5; ++i )
    {
      circ.add_input( "i" + std::to_string( i ) );
      pool.push_back( circ.inputs.back() );
    }
    for ( int g = 0; g < 15; ++g )
    {
      const auto kind = static_cast<GateKind>( rng.below( 8 ) );
      const int arity = gate_min_fanins( kind ) == 1 ? 1 : 2 + static_cast<int>( rng.below( 2 ) );
      std::vector<std::string> fan;
      for ( int f = 0; f < arity; ++f )
      {
        fan.push_back( pool[rng.below( pool.size() )] );
      }
      const std::string name = "n" + std::to_string( g );
      circ.add_gate( name, kind, fan );
      pool.push_back( name );
    }
    circ.add_output( pool.back() );
    circ.add_output( pool[pool.size() / 2] );
    circ.validate();

    const auto aig = to_aig( circ );
    const CircuitEvaluator eval( circ );
    std::vector<uint64_t> words( 5 );
    for ( int i = 0; i < 5; ++i )
    {
      words[i] = simulation_pattern( i, 0 );
    }
    const auto gate_out = eval.eval_words( words );
    const auto node_vals = aig.simulate_words( words );
    for ( size_t o = 0; o < gate_out.size(); ++o )
    {
      const uint64_t got = Aig::lit_word( node_vals, aig.output_lits()[o] );
      CHECK( ( got & 0xffffffffu ) == ( gate_out[o] & 0xffffffffu ) );
    }
  }
}
