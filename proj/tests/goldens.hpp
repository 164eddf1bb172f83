#pragma once

// Generated by tests/oracle/generate_goldens.py. Do not edit by hand.

namespace golden {

inline constexpr const char* pbar_0 = "1";
inline constexpr const char* pbar_1 = "2";
inline constexpr const char* pbar_2 = "4";
inline constexpr const char* pbar_3 = "8";
inline constexpr const char* pbar_4 = "14";
inline constexpr const char* pbar_10 = "232";
inline constexpr const char* pbar_50 = "10605564";
inline constexpr const char* pbar_100 = "53287424374";
inline constexpr const char* pbar_200 = "12055596613448604";
inline constexpr const char* pbar_1000 = "1729358213749333758244155698123024617584";
inline constexpr const char* pbar_3000 = "22244778146822050439977821626778207116259703660204722853496310111431520";
inline constexpr const char* pbar_6000 = "100255530577548972671153179897591574954632705734735186491398429357782917412756587278395388893903901056";

inline constexpr const char* sd_2_2_0 = "-0.03338284815613065578658590523283749364735";
inline constexpr const char* sd_3_2_0 = "0.009229281821905126085328009266909500994006";
inline constexpr const char* sd_4_2_0 = "0.003356042616959122913945525306636468170567";
inline constexpr const char* sd_100_2_0 = "0.00001278194524838911064402016875981371831533";
inline constexpr const char* sd_1000_2_0 = "0.00000005935403024169951135711588818876061736935";
inline constexpr const char* sd_500_3_1 = "0.000000001053480825079975133699562850351941667243";
inline constexpr const char* sd_2000_2_5_2 = "0.000000007301920693278707916149950345314388667068";
inline constexpr const char* logr_100_0 = "0.246989661998296016689747084779152170151";
inline constexpr const char* H_100_2_0 = "0.00001278192595078892525204398174489624190092";
inline constexpr const char* G_100_2 = "0.0000000000192976001853919761870149174764144168353";
inline constexpr const char* That_1 = "1.971847674328152073315569506191703109804";
inline constexpr const char* u0_3 = "0.9671682101338346544589309176864880040213";
inline constexpr const char* u0_4 = "1.009272002970741949232600739234967765123";
inline constexpr const char* u0_5 = "1.003361680433135412488869780967129673286";
inline constexpr const char* scaled_1000_2_0 = "1.876939238742847571610633449202116291567";
inline constexpr const char* scaled_4000_2_0 = "2.074021262799661153394925081592240359443";
inline constexpr const char* C_2 = "2.356194490192344928846982537459627163148";
inline constexpr const char* C_2_0 = "5.079441541679835928251696364374529704227";
inline constexpr const char* C2_2_w1 = "0.3074222453852190599710061413495955036729";
inline constexpr const char* C2_2_w2 = "0.5748444907704381199420122826991910073458";
inline constexpr const char* N0_2 = "3.505614563403109891693806802298045211211";
inline constexpr const char* N0_6 = "18.00192514604070422229291868438660234361";
inline constexpr const char* N0_8 = "27.41426972218581193696469320047362538608";

inline constexpr const char* cut_N1_2_0 = "132";
inline constexpr const char* cut_expS_2_0 = "5";
inline constexpr const char* cut_N2_2_0 = "15";
inline constexpr const char* cut_N3_2_0 = "5505";
inline constexpr const char* cut_N_2_0 = "5505";
inline constexpr const char* cut_N1_2_1 = "132";
inline constexpr const char* cut_expS_2_1 = "5";
inline constexpr const char* cut_N2_2_1 = "15";
inline constexpr const char* cut_N3_2_1 = "5505";
inline constexpr const char* cut_N_2_1 = "5505";
inline constexpr const char* cut_N1_3_0 = "305";
inline constexpr const char* cut_expS_3_0 = "7";
inline constexpr const char* cut_N2_3_0 = "70";
inline constexpr const char* cut_N3_3_0 = "5505";
inline constexpr const char* cut_N_3_0 = "5505";
inline constexpr const char* cut_N1_3_1 = "305";
inline constexpr const char* cut_expS_3_1 = "7";
inline constexpr const char* cut_N2_3_1 = "70";
inline constexpr const char* cut_N3_3_1 = "5505";
inline constexpr const char* cut_N_3_1 = "5505";
inline constexpr const char* ntilde_0 = "5505";
inline constexpr const char* ntilde_1 = "5505";
inline constexpr const char* ntilde_5_2 = "5505";
inline constexpr const char* lemma24_cutoff_2 = "5";
inline constexpr const char* lemma24_cutoff_3 = "7";
inline constexpr const char* lemma24_cutoff_4 = "9";
inline constexpr const char* lemma24_cutoff_5 = "10";

inline constexpr const char* ln_n_u_exp_0 = "1073743872.0";
inline constexpr const char* ln_n_u1_exp_0 = "1073743873.131277851775011059153098593011";
inline constexpr const char* n_u_pow_0 = "274877906944";
inline constexpr const char* ln_n_u_exp_1 = "29628944917127.05263157894736842105263158";
inline constexpr const char* ln_n_u1_exp_1 = "29628944917128.5401345107131590588582209";
inline constexpr const char* n_u_pow_1 = "1037261684426834491014632701952";

}  // namespace golden
