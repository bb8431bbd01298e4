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

#include <tlgkit/tlg_io.hpp>
#include <tlgkit/tlg_network.hpp>

#include <sstream>

using namespace tlgkit;

namespace
{

TlgNetwork make_maj_and_net()
{
  // z = MAJ(a, b, c); y = AND(z, d)
  TlgNetwork net;
  net.add_input( "a" );
  net.add_input( "b" );
  net.add_input( "c" );
  net.add_input( "d" );
  net.add_output( "y" );
  net.add_gate( Tlg{ "z", { { "a", 1 }, { "b", 1 }, { "c", 1 } }, 2, 0 } );
  net.add_gate( Tlg{ "y", { { "z", 1 }, { "d", 1 } }, 2, 0 } );
  net.validate();
  return net;
}

} // namespace

TEST_CASE( "gate firing follows the weighted sum" )
{
  const auto net = make_maj_and_net();
  const TlgEvaluator eval( net );
  for ( unsigned m = 0; m < 16; ++m )
  {
    const bool a = m & 1, b = ( m >> 1 ) & 1, c = ( m >> 2 ) & 1, d = ( m >> 3 ) & 1;
    const bool maj = ( int( a ) + int( b ) + int( c ) ) >= 2;
    const bool expect = maj && d;
    CHECK( eval.eval( { a, b, c, d }, {} )[0] == expect );
  }
}

TEST_CASE( "word evaluation matches single-vector evaluation" )
{
  const auto net = make_maj_and_net();
  const TlgEvaluator eval( net );

  std::vector<uint64_t> words( 4 );
  for ( int i = 0; i < 4; ++i )
  {
    words[i] = 0;
  }
  // pack all 16 assignments into the low lanes
  for ( int lane = 0; lane < 16; ++lane )
  {
    for ( int i = 0; i < 4; ++i )
    {
      if ( ( lane >> i ) & 1 )
      {
        words[i] |= uint64_t( 1 ) << lane;
      }
    }
  }
  const auto out = eval.eval_words( words, {} )[0];
  for ( int lane = 0; lane < 16; ++lane )
  {
    const bool a = lane & 1, b = ( lane >> 1 ) & 1, c = ( lane >> 2 ) & 1, d = ( lane >> 3 ) & 1;
    const bool expect = ( ( int( a ) + int( b ) + int( c ) ) >= 2 ) && d;
    CHECK( ( ( out >> lane ) & 1u ) == expect );
  }
}

TEST_CASE( "negative weights and thresholds" )
{
  // NAND realized as weights (-1, -1), T = -1
  TlgNetwork net;
  net.add_input( "a" );
  net.add_input( "b" );
  net.add_output( "y" );
  net.add_gate( Tlg{ "y", { { "a", -1 }, { "b", -1 } }, -1, 0 } );
  net.validate();
  const TlgEvaluator eval( net );
  CHECK( eval.eval( { false, false }, {} )[0] == true );
  CHECK( eval.eval( { true, false }, {} )[0] == true );
  CHECK( eval.eval( { false, true }, {} )[0] == true );
  CHECK( eval.eval( { true, true }, {} )[0] == false );
}

TEST_CASE( "key inputs join the weighted sum" )
{
  // AND gate with a compensated key input: correct key restores AND
  TlgNetwork net;
  net.add_input( "a" );
  net.add_input( "b" );
  net.add_key_input( "k0" );
  net.add_output( "y" );
  net.add_gate( Tlg{ "y", { { "a", 1 }, { "b", 1 }, { "k0", 2, true } }, 4, 0 } );
  net.validate();
  const TlgEvaluator eval( net );

  for ( unsigned m = 0; m < 4; ++m )
  {
    const bool a = m & 1, b = ( m >> 1 ) & 1;
    // correct key bit 1: threshold 4 needs 1+1+2
    CHECK( eval.eval( { a, b }, { true } )[0] == ( a && b ) );
    // wrong key bit 0: the sum can never reach 4
    CHECK( eval.eval( { a, b }, { false } )[0] == false );
  }
}

TEST_CASE( "gate truth tables come from the weighted sum" )
{
  const Tlg maj{ "z", { { "a", 1 }, { "b", 1 }, { "c", 1 } }, 2, 0 };
  CHECK( TlgNetwork::gate_function( maj ) == TruthTable::from_bits( 3, 0xe8 ) );

  const Tlg nand2{ "y", { { "a", -1 }, { "b", -1 } }, -1, 0 };
  CHECK( TlgNetwork::gate_function( nand2 ) == TruthTable::from_bits( 2, 0x7 ) );

  const Tlg weighted{ "w", { { "a", 2 }, { "b", 1 }, { "c", 1 } }, 2, 0 };
  // a OR (b AND c)
  CHECK( TlgNetwork::gate_function( weighted ) ==
         ( TruthTable::nth_var( 3, 0 ) | ( TruthTable::nth_var( 3, 1 ) &
                                           TruthTable::nth_var( 3, 2 ) ) ) );
}

TEST_CASE( "weighted fanin sums absolute weights" )
{
  const Tlg g{ "y", { { "a", 2 }, { "b", -3 }, { "k", 0, true } }, 1, 0 };
  CHECK( g.weighted_fanin() == 5 );
  CHECK( g.num_key_inputs() == 1 );
}

TEST_CASE( "validation rejects malformed networks" )
{
  SECTION( "zero weight on a data input" )
  {
    TlgNetwork net;
    net.add_input( "a" );
    net.add_input( "b" );
    net.add_output( "y" );
    net.add_gate( Tlg{ "y", { { "a", 0 }, { "b", 1 } }, 1, 0 } );
    CHECK_THROWS_AS( net.validate(), parse_error );
  }

  SECTION( "zero weight on a key input is fine" )
  {
    TlgNetwork net;
    net.add_input( "a" );
    net.add_key_input( "k0" );
    net.add_output( "y" );
    net.add_gate( Tlg{ "y", { { "a", 1 }, { "k0", 0, true } }, 1, 0 } );
    CHECK_NOTHROW( net.validate() );
  }

  SECTION( "duplicate fanin" )
  {
    TlgNetwork net;
    net.add_input( "a" );
    net.add_output( "y" );
    net.add_gate( Tlg{ "y", { { "a", 1 }, { "a", 1 } }, 2, 0 } );
    CHECK_THROWS_AS( net.validate(), parse_error );
  }

  SECTION( "undefined signal" )
  {
    TlgNetwork net;
    net.add_input( "a" );
    net.add_output( "y" );
    net.add_gate( Tlg{ "y", { { "a", 1 }, { "ghost", 1 } }, 2, 0 } );
    CHECK_THROWS_AS( net.validate(), parse_error );
  }

  SECTION( "cycle" )
  {
    TlgNetwork net;
    net.add_input( "a" );
    net.add_output( "p" );
    net.add_gate( Tlg{ "p", { { "a", 1 }, { "q", 1 } }, 1, 0 } );
    net.add_gate( Tlg{ "q", { { "p", 1 } }, 1, 0 } );
    CHECK_THROWS_AS( net.validate(), parse_error );
  }

  SECTION( "key flag must match the declaration" )
  {
    TlgNetwork net;
    net.add_input( "a" );
    net.add_key_input( "k0" );
    net.add_output( "y" );
    net.add_gate( Tlg{ "y", { { "a", 1 }, { "k0", 1, false } }, 1, 0 } );
    CHECK_THROWS_AS( net.validate(), parse_error );
  }
}

TEST_CASE( "validation topologically sorts gates and computes depth" )
{
  TlgNetwork net;
  net.add_input( "a" );
  net.add_output( "y" );
  net.add_gate( Tlg{ "y", { { "t", 1 } }, 1, 0 } );
  net.add_gate( Tlg{ "t", { { "a", 1 } }, 1, 0 } );
  net.validate();
  CHECK( net.gates[0].output == "t" );
  CHECK( net.gates[1].output == "y" );
  CHECK( net.depth() == 2 );
}

TEST_CASE( "network text round trips" )
{
  TlgNetwork net;
  net.name = "demo";
  net.add_input( "a" );
  net.add_input( "b" );
  net.add_key_input( "k0" );
  net.add_key_input( "k1" );
  net.add_output( "y" );
  net.add_gate( Tlg{ "t", { { "a", 1 }, { "b", 2 }, { "k0", -2, true } }, 1, 0 } );
  net.add_gate( Tlg{ "y", { { "t", 1 }, { "k1", 3, true } }, 4, 0 } );
  net.validate();

  std::ostringstream text;
  write_tlg( net, text );
  std::istringstream back( text.str() );
  const auto again = parse_tlg( back, "demo" );

  CHECK( again.inputs == net.inputs );
  CHECK( again.key_inputs == net.key_inputs );
  CHECK( again.outputs == net.outputs );
  REQUIRE( again.gates.size() == net.gates.size() );
  for ( size_t i = 0; i < net.gates.size(); ++i )
  {
    CHECK( again.gates[i].output == net.gates[i].output );
    CHECK( again.gates[i].threshold == net.gates[i].threshold );
    REQUIRE( again.gates[i].inputs.size() == net.gates[i].inputs.size() );
    for ( size_t j = 0; j < net.gates[i].inputs.size(); ++j )
    {
      CHECK( again.gates[i].inputs[j].signal == net.gates[i].inputs[j].signal );
      CHECK( again.gates[i].inputs[j].weight == net.gates[i].inputs[j].weight );
      CHECK( again.gates[i].inputs[j].is_key == net.gates[i].inputs[j].is_key );
    }
  }

  // behavior identical on a few vectors
  const TlgEvaluator e1( net ), e2( again );
  for ( unsigned m = 0; m < 16; ++m )
  {
    const std::vector<bool> in{ bool( m & 1 ), bool( ( m >> 1 ) & 1 ) };
    const std::vector<bool> key{ bool( ( m >> 2 ) & 1 ), bool( ( m >> 3 ) & 1 ) };
    CHECK( e1.eval( in, key ) == e2.eval( in, key ) );
  }
}

TEST_CASE( "network parser reports malformed lines" )
{
  SECTION( "missing threshold clause" )
  {
    std::istringstream in( "INPUT(a)\nOUTPUT(y)\ny = TH(a:1)\n" );
    try
    {
      parse_tlg( in );
      FAIL( "expected parse_error" );
    }
    catch ( const parse_error& e )
    {
      CHECK( e.line() == 3 );
    }
  }

  SECTION( "bad weight" )
  {
    std::istringstream in( "INPUT(a)\nOUTPUT(y)\ny = TH(a:x ; T=1)\n" );
    CHECK_THROWS_AS( parse_tlg( in ), parse_error );
  }

  SECTION( "missing colon" )
  {
    std::istringstream in( "INPUT(a)\nOUTPUT(y)\ny = TH(a ; T=1)\n" );
    CHECK_THROWS_AS( parse_tlg( in ), parse_error );
  }

  SECTION( "wrong keyword" )
  {
    std::istringstream in( "INPUT(a)\nOUTPUT(y)\ny = AND(a:1 ; T=1)\n" );
    CHECK_THROWS_AS( parse_tlg( in ), parse_error );
  }

  SECTION( "trailing junk in threshold" )
  {
    std::istringstream in( "INPUT(a)\nOUTPUT(y)\ny = TH(a:1 ; T=1junk)\n" );
    CHECK_THROWS_AS( parse_tlg( in ), parse_error );
  }
}

TEST_CASE( "key files round trip" )
{
  const std::vector<bool> key{ true, false, true, true, false };
  std::ostringstream text;
  write_key( key, text );
  CHECK( text.str() == "key = 10110\n" );

  std::istringstream back( text.str() );
  CHECK( parse_key( back ) == key );
}

TEST_CASE( "key parser rejects bad content" )
{
  SECTION( "bad character" )
  {
    std::istringstream in( "key = 01x1\n" );
    CHECK_THROWS_AS( parse_key( in ), parse_error );
  }
  SECTION( "missing assignment" )
  {
    std::istringstream in( "0101\n" );
    CHECK_THROWS_AS( parse_key( in ), parse_error );
  }
  SECTION( "empty file" )
  {
    std::istringstream in( "# nothing here\n" );
    CHECK_THROWS_AS( parse_key( in ), parse_error );
  }
}
